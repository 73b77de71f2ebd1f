# -*- coding: UTF-8 -*-
# Copyright 2026 compat-reason contributors
# License: BSD (see file COPYING for details)

"""Train with a grid of alpha values and each regularizer.

Writes :file:`alpha_runs.csv` (one row per run and test set),
:file:`alpha.csv` (mean and deviation per regularizer and alpha) and
:file:`alpha_plot.json`.

"""

from compat_reason.lib.evalharness.sweeps import sweep_alpha, best_alpha
from compat_reason.management.sweep import SweepCommand


class Command(SweepCommand):
    help = "Sweep the weight of the reason regularizer."

    report_name = 'alpha'

    def add_arguments(self, parser):
        super(Command, self).add_arguments(parser)
        parser.add_argument(
            '--grid', type=float, nargs='+',
            help="The alpha values (default from the evalharness settings)")
        parser.add_argument(
            '--reg', choices=('ce', 'linear', 'square'),
            help="Sweep only this regularizer")

    def handle(self, *args, **options):
        site, dataset, out = self.prepare(options)
        conf = site.plugins.evalharness
        grid = options['grid'] or conf.alpha_grid
        regularizers = conf.regularizers
        if options['reg']:
            regularizers = (options['reg'],)
        report = sweep_alpha(
            grid, dataset, site.plugins.training, site.model_config(),
            regularizers, conf.repetitions)
        self.write_report(report, out)
        for reg in regularizers:
            self.stdout.write("best alpha for %s: %s" % (
                reg, best_alpha(report, reg)))
