# -*- coding: UTF-8 -*-
# Copyright 2026 compat-reason contributors
# License: BSD (see file COPYING for details)

"""Evaluate a trained model on one or more feature files."""

from collections import OrderedDict

from unipath import Path

from compat_reason.lib.colorfeat.ndjson import load_feature_records
from compat_reason.lib.compatnet.checkpoint import load_checkpoint
from compat_reason.lib.evalharness.evaluation import evaluate, METHODS
from compat_reason.lib.evalharness.reports import write_eval_csv
from compat_reason.management.base import SiteCommand


class Command(SiteCommand):
    help = "Compute judgment and reason accuracy of a model."

    def add_arguments(self, parser):
        super(Command, self).add_arguments(parser)
        parser.add_argument(
            'data', nargs='+', help="Labelled feature files")
        parser.add_argument(
            '--model', required=True, help="Checkpoint file")
        parser.add_argument(
            '--method', default='ours', choices=METHODS,
            help="How reasons are predicted")
        parser.add_argument(
            '--out', required=True, help="The CSV file to write")

    def handle(self, *args, **options):
        self.get_site(options)
        for fn in options['data']:
            self.check_file(fn)
        model = load_checkpoint(self.check_file(options['model']))
        out = self.check_output(options['out'])
        dims = model.config.feature_dims()
        results = OrderedDict()
        for fn in options['data']:
            name = Path(fn).stem
            results[name] = evaluate(
                model, load_feature_records(fn, dims), options['method'])
        write_eval_csv(results, out)
        for name, res in results.items():
            self.stdout.write("%s: judgment %.2f reason %s" % (
                name, res.judgment_acc,
                "n/a" if res.reason_acc is None
                else "%.2f" % res.reason_acc))
