# -*- coding: UTF-8 -*-
# Copyright 2026 compat-reason contributors
# License: BSD (see file COPYING for details)

"""Shared code of the sweep commands."""

import logging

from unipath import Path

from compat_reason.lib.synthdata.generator import read_dataset
from compat_reason.management.base import SiteCommand

logger = logging.getLogger(__name__)


class SweepCommand(SiteCommand):
    """A command which trains several models on a dataset directory
    written by ``gen-data`` and writes a report into ``--out``."""

    report_name = None

    def add_arguments(self, parser):
        super(SweepCommand, self).add_arguments(parser)
        parser.add_argument(
            '--data', required=True,
            help="Directory with train, val and test feature files")
        parser.add_argument(
            '--out', required=True, help="Output directory")
        parser.add_argument(
            '--repetitions', type=int,
            help="Number of training seeds per setting")

    def prepare(self, options):
        """Return the site, the dataset and the output directory."""
        site = self.get_site(options)
        if options['repetitions'] is not None:
            site.configure_plugin(
                'evalharness', repetitions=options['repetitions'])
            site.configure_plugin(
                'evalharness',
                formulation_repetitions=options['repetitions'])
        data = self.check_dir(options['data'])
        out = Path(options['out']).absolute()
        self.check_output(out)
        dataset = read_dataset(data, site.model_config().feature_dims())
        if not out.exists():
            out.mkdir(parents=True)
        return site, dataset, out

    def write_report(self, report, out):
        report.write_csv(out.child(self.report_name + '_runs.csv'))
        report.write_summary_csv(out.child(self.report_name + '.csv'))
        if any(row['split'] == 'test_random' for row in report.rows):
            report.write_summary_csv(
                out.child(self.report_name + '_random.csv'), 'test_random')
        report.write_plot_json(out.child(self.report_name + '_plot.json'))
        for key, stats in report.summarize().items():
            self.stdout.write("%s: judgment %s reason %s" % (
                " ".join(str(k) for k in key),
                _fmt(stats['judgment_acc_mean'], stats['judgment_acc_std']),
                _fmt(stats['reason_acc_mean'], stats['reason_acc_std'])))


def _fmt(mean, std):
    if mean is None:
        return "n/a"
    if std is None:
        return "%.1f" % mean
    return "%.1f+-%.1f" % (mean, std)
