# -*- coding: UTF-8 -*-
# Copyright 2026 compat-reason contributors
# License: BSD (see file COPYING for details)

"""Train a compatibility model on a feature file."""

import hashlib

from compat_reason.lib.colorfeat.ndjson import load_feature_records
from compat_reason.lib.compatnet.checkpoint import (
    save_checkpoint, checkpoint_bytes)
from compat_reason.lib.evalharness.baselines import baseline_multitask
from compat_reason.lib.training.loop import train, write_log
from compat_reason.management.base import SiteCommand


class Command(SiteCommand):
    help = "Train a model and write its checkpoint."

    def add_arguments(self, parser):
        super(Command, self).add_arguments(parser)
        self.add_training_arguments(parser)
        parser.add_argument(
            '--train', required=True, help="Training feature file")
        parser.add_argument('--val', help="Validation feature file")
        parser.add_argument(
            '--out', required=True, help="The checkpoint file to write")
        parser.add_argument('--log', help="CSV file for per-epoch metrics")
        parser.add_argument(
            '--multitask', action='store_true',
            help="Train a reason head instead of the reason regularizer")

    def handle(self, *args, **options):
        site = self.get_site(options)
        config = site.plugins.training
        model_config = site.model_config()
        dims = model_config.feature_dims()
        self.check_file(options['train'])
        if options['val']:
            self.check_file(options['val'])
        out = self.check_output(options['out'])
        if options['log']:
            self.check_output(options['log'])
        records = load_feature_records(options['train'], dims)
        val = None
        if options['val']:
            val = load_feature_records(options['val'], dims)
        kw = dict(val_records=val,
                  check_finite=site.plugins.autodiff.check_finite)
        if options['multitask']:
            result = baseline_multitask(records, config, model_config, **kw)
        else:
            result = train(records, config, model_config, **kw)
        save_checkpoint(result.model, out)
        if options['log']:
            write_log(result.log, options['log'])
        if result.log:
            self.stdout.write("Trained %d epochs, final loss %.4f" % (
                len(result.log), result.log[-1].loss))
        else:
            self.stdout.write("Trained 0 epochs")
        if result.best_epoch is not None:
            self.stdout.write("Best validation epoch: %d" % result.best_epoch)
        self.stdout.write("sha256 %s" % hashlib.sha256(
            checkpoint_bytes(result.model)).hexdigest())
