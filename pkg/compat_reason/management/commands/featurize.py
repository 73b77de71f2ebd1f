# -*- coding: UTF-8 -*-
# Copyright 2026 compat-reason contributors
# License: BSD (see file COPYING for details)

"""Compute the color feature of a garment image.

The image may be in any format Pillow reads (PNG, JPEG, PPM, ...).
The output is a JSON object with the 25 feature values and the major
colors.

"""

import json

from compat_reason.lib.colorfeat.foco import (
    color_histogram, build_color_feature)
from compat_reason.lib.colorfeat.palette import color_name
from compat_reason.lib.colorfeat.pixels import read_pixel_file
from compat_reason.management.base import SiteCommand


class Command(SiteCommand):
    help = "Write the 25-d FOCO color feature of an image as JSON."

    def add_arguments(self, parser):
        super(Command, self).add_arguments(parser)
        parser.add_argument('image', help="An image file")
        parser.add_argument(
            '--out', required=True, help="The JSON file to write")

    def handle(self, *args, **options):
        self.get_site(options)
        image = self.check_file(options['image'])
        out = self.check_output(options['out'])
        feature = build_color_feature(color_histogram(read_pixel_file(image)))
        data = dict(
            color=feature.values.tolist(),
            major_colors=[
                dict(foco=list(code), ratio=ratio, name=color_name(code))
                for code, ratio in feature.major_colors()])
        with open(out, 'w') as fd:
            json.dump(data, fd, indent=2, sort_keys=True)
            fd.write('\n')
        for item in data['major_colors']:
            self.stdout.write("%(name)s %(ratio).3f" % item)
