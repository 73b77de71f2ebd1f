# -*- coding: UTF-8 -*-
# Copyright 2026 compat-reason contributors
# License: BSD (see file COPYING for details)


"""The judgment network.

Five intra-factor networks (one per factor) each receive the
concatenated top and bottom features of their factor.  Their outputs
are concatenated into the intra-factor compatibility feature `x`, and
the inter-factor network maps `x` to the logits `y` of the three
judgments.  Every network has three fully connected layers with relu
after the first two.

The reasons partition `x`: color and print each own the output of
their network, design owns the outputs of the material, silhouette and
detail networks.

.. autosummary::
   :toctree:

    models
    checkpoint

"""

from compat_reason.lib.compat.plugin import Plugin as BasePlugin


class Plugin(BasePlugin):
    "See :class:`compat_reason.lib.compat.plugin.Plugin`."

    verbose_name = "Compatibility network"

    intra_hidden = (64, 64)
    """Sizes of the two hidden layers of each intra-factor network."""

    intra_out = 32
    """Output size of each intra-factor network.  The compatibility
    feature `x` has five times as many elements."""

    inter_hidden = (64, 32)
    """Sizes of the two hidden layers of the inter-factor network."""

    reason_hidden = (64, 32)
    """Sizes of the hidden layers of the reason head which only the
    multitask baseline uses."""
