# -*- coding: UTF-8 -*-
# Copyright 2026 compat-reason contributors
# License: BSD (see file COPYING for details)

"""Train and evaluate the baselines and the three regularizers."""

from compat_reason.lib.evalharness.sweeps import compare_methods
from compat_reason.management.sweep import SweepCommand


class Command(SweepCommand):
    help = "Compare multitask, IFIV, Reason-NoReg and the regularizers."

    report_name = 'method'

    def add_arguments(self, parser):
        super(Command, self).add_arguments(parser)
        parser.add_argument(
            '--alpha', type=float, help="Weight of the reason regularizer")
        parser.add_argument(
            '--methods', nargs='+',
            help="The methods to compare (default from the settings)")

    def handle(self, *args, **options):
        site, dataset, out = self.prepare(options)
        conf = site.plugins.evalharness
        report = compare_methods(
            dataset, site.plugins.training, site.model_config(),
            options['methods'] or conf.methods, conf.repetitions)
        self.write_report(report, out)
