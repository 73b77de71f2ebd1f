# -*- coding: UTF-8 -*-
# Copyright 2026 compat-reason contributors
# License: BSD (see file COPYING for details)


"""Tracing the reason of a judgment back to the factors, and the loss
which teaches the network to trace it correctly.

The contribution of an element `x_i` of the compatibility feature to
the logit `y_j` is its gradient times its activation, ``dy_j/dx_i *
relu(x_i)``.  Averaging the positive part over the elements of a reason
gives the positive contribution of that reason.  A good outfit is good
because of the reason whose positive contribution to "good" exceeds its
contribution to "normal" the most, likewise for bad.

During training, the same difference for the ground-truth judgment
(the F vector) is pushed towards the labelled reason by one of three
regularizers.  The F vector contains gradients, so minimizing the loss
differentiates through them.

.. autosummary::
   :toctree:

    contributions
    regularizers
    loss

"""

from compat_reason.lib.compat.plugin import Plugin as BasePlugin


class Plugin(BasePlugin):
    "See :class:`compat_reason.lib.compat.plugin.Plugin`."

    verbose_name = "Reasons"

    formulation = 'F6'
    """The scoring used to predict reasons.  F6 (positive contribution
    difference) is the one the regularizers train; the others exist for
    the formulation ablation."""
