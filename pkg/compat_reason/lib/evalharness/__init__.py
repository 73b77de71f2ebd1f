# -*- coding: UTF-8 -*-
# Copyright 2026 compat-reason contributors
# License: BSD (see file COPYING for details)


"""Metrics, baselines and ablation sweeps.

The judgment accuracy is the percentage of outfits whose judgment is
predicted correctly.  The reason accuracy is the percentage of correct
reasons among the good or bad outfits whose judgment was predicted
correctly.

The baselines are the same network trained without reason supervision
(Reason-NoReg), that network read out by the mean contribution of
each reason (IFIV), and a network with an added reason head trained
by cross entropy on the reason labels (multitask).

Sweeps repeat every run with several training seeds and may run in
parallel: the environment variable ``COMPAT_REASON_THREADS`` sets the
number of workers (default 1).

.. autosummary::
   :toctree:

    metrics
    evaluation
    baselines
    sweeps
    reports

"""

from compat_reason.lib.compat.plugin import Plugin as BasePlugin


class Plugin(BasePlugin):
    "See :class:`compat_reason.lib.compat.plugin.Plugin`."

    verbose_name = "Evaluation"

    repetitions = 5
    """How many training seeds each sweep point is averaged over.  The
    seeds are the training seed, plus 1, plus 2 and so on."""

    alpha_grid = (0.0, 0.1, 1.0, 10.0, 100.0, 1000.0)

    regularizers = ('ce', 'linear', 'square')

    formulation_repetitions = 10

    methods = ('multitask', 'ifiv', 'noreg', 'linear', 'square', 'ce')
    """The rows of the method comparison."""
