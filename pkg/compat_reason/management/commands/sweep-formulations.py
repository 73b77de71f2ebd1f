# -*- coding: UTF-8 -*-
# Copyright 2026 compat-reason contributors
# License: BSD (see file COPYING for details)

"""Compare the reason formulations F1 to F6 on models trained without
reason supervision."""

from compat_reason.lib.evalharness.sweeps import sweep_formulations
from compat_reason.management.sweep import SweepCommand


class Command(SweepCommand):
    help = "Score reasons with each formulation (alpha = 0)."

    report_name = 'formulation'

    def handle(self, *args, **options):
        site, dataset, out = self.prepare(options)
        report = sweep_formulations(
            dataset, site.plugins.training, site.model_config(),
            site.plugins.evalharness.formulation_repetitions)
        self.write_report(report, out)
