# -*- coding: UTF-8 -*-
# Copyright 2026 compat-reason contributors
# License: BSD (see file COPYING for details)

"""Generate a synthetic dataset.

Writes :file:`train.ndjson`, :file:`val.ndjson`, :file:`test.ndjson` and
:file:`test_random.ndjson` into the directory given by ``--out``.

"""

import logging

from unipath import Path

from compat_reason.lib.synthdata.generator import (
    generate_dataset, make_test_random, write_dataset, class_mix)
from compat_reason.management.base import SiteCommand

logger = logging.getLogger(__name__)


class Command(SiteCommand):
    help = "Generate a synthetic train/val/test dataset of outfits."

    def add_arguments(self, parser):
        super(Command, self).add_arguments(parser)
        parser.add_argument(
            '--out', required=True, help="Output directory")

    def handle(self, *args, **options):
        site = self.get_site(options)
        config = site.plugins.synthdata
        out = Path(options['out']).absolute()
        self.check_output(out)
        dataset = generate_dataset(
            config, dims=site.plugins.colorfeat.get_dims())
        dataset.test_random = make_test_random(dataset.test, config.seed + 1)
        for name, records in dataset.splits():
            self.stdout.write("%s: %d outfits (good/normal/bad %s)" % (
                name, len(records),
                "/".join("%.1f%%" % p for p in class_mix(records))))
        for fn in write_dataset(dataset, out):
            logger.info("Wrote %s", fn)
