# -*- coding: UTF-8 -*-
# Copyright 2026 compat-reason contributors
# License: BSD (see file COPYING for details)


"""Reverse-mode automatic differentiation with gradients which can be
differentiated again.

Every quantity of a forward pass (network parameters, the
compatibility feature, the logits) lives as a node of a
:class:`DiffGraph <compat_reason.lib.autodiff.graph.DiffGraph>`.  The
reason loss contains derivatives of the logits, so training
differentiates a gradient: :func:`grad
<compat_reason.lib.autodiff.backward.grad>` called with
``create_graph=True`` writes its result into the same graph.

All values are 64-bit floats.  The derivative of relu at exactly 0 is
0, and ties of a maximum go to the lowest index.

.. autosummary::
   :toctree:

    graph
    ops
    backward
    gradcheck

"""

from compat_reason.lib.compat.plugin import Plugin as BasePlugin


class Plugin(BasePlugin):
    "See :class:`compat_reason.lib.compat.plugin.Plugin`."

    verbose_name = "Automatic differentiation"

    check_finite = True
    """Whether every new node is checked for NaN and infinite values.
    A non-finite value raises :class:`NonFiniteError
    <compat_reason.lib.compat.exceptions.NonFiniteError>`."""

    fd_step = 1e-6
    """The step of the central differences used by :mod:`gradcheck
    <compat_reason.lib.autodiff.gradcheck>`."""

    first_order_tolerance = 1e-5

    second_order_tolerance = 1e-4

    kink_margin = 1e-3
    """Random points closer than this to a relu or max kink are drawn
    again before comparing with finite differences."""

    def check_options(self):
        """Return the keyword arguments for the checks of
        :mod:`gradcheck <compat_reason.lib.autodiff.gradcheck>`."""
        return dict(step=self.fd_step, margin=self.kink_margin)
