# -*- coding: UTF-8 -*-
# Copyright 2026 compat-reason contributors
# License: BSD (see file COPYING for details)

"""Explain the judgment of one outfit.

Prints the sentence and the contribution table of the outfit and writes
both as JSON.  The table has one column per reason and three rows: ``C``
is the contribution to the predicted judgment, ``G`` and ``B`` the
positive contribution to good and to bad minus that to normal.

"""

import json

from compat_reason.lib.colorfeat.ndjson import load_feature_records
from compat_reason.lib.compat.exceptions import ExplanationError
from compat_reason.lib.compatnet.checkpoint import load_checkpoint
from compat_reason.lib.explain.explainer import (
    explain_record, format_contribution_table)
from compat_reason.management.base import SiteCommand


class Command(SiteCommand):
    help = "Print the judgment, reason and explanation of one outfit."

    def add_arguments(self, parser):
        super(Command, self).add_arguments(parser)
        parser.add_argument(
            '--model', required=True, help="Checkpoint file")
        parser.add_argument(
            '--data', required=True, help="Feature file with the outfit")
        parser.add_argument(
            '--id', required=True, dest='outfit_id', help="The outfit_id")
        parser.add_argument(
            '--out', required=True, help="The JSON file to write")

    def handle(self, *args, **options):
        site = self.get_site(options)
        model = load_checkpoint(self.check_file(options['model']))
        data = self.check_file(options['data'])
        out = self.check_output(options['out'])
        templates = site.plugins.explain.get_templates()
        for rec in load_feature_records(data, model.config.feature_dims()):
            if rec.outfit_id == options['outfit_id']:
                break
        else:
            raise ExplanationError("No outfit %r in %s" % (
                options['outfit_id'], data))
        expl = explain_record(model, rec, templates)
        with open(out, 'w') as fd:
            json.dump(expl.as_dict(), fd, indent=2, sort_keys=True)
            fd.write('\n')
        self.stdout.write(expl.sentence)
        for line in format_contribution_table(expl.table):
            self.stdout.write(line)
