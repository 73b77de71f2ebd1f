# -*- coding: UTF-8 -*-
# Copyright 2026 compat-reason contributors
# License: BSD (see file COPYING for details)


"""Factor features of a garment: the FOCO color feature computed from
pixels, and the ingestion of feature files which carry the other four
factors (print, material, silhouette and design details) as produced
by some attribute extractor.

The FOCO color space divides hue, saturation and brightness into 15, 8
and 6 levels.  The color feature of a garment describes its five major
FOCO colors, each by five numbers (hue, saturation, brightness, ratio,
presence), which gives 25 values.

.. autosummary::
   :toctree:

    foco
    palette
    pixels
    records
    ndjson

"""

from compat_reason.lib.compat.plugin import Plugin as BasePlugin


class Plugin(BasePlugin):
    "See :class:`compat_reason.lib.compat.plugin.Plugin`."

    verbose_name = "Factor features"

    print_dim = 14
    """Length of the print feature of a garment (one value per print
    type)."""

    material_dim = 10

    silhouette_dim = 5

    detail_dim = 8

    def get_dims(self):
        """Return a dict mapping each factor name to the length of its
        feature vector.  The color feature has a fixed length."""
        from .foco import COLOR_DIM
        return dict(
            color=COLOR_DIM, print=self.print_dim,
            material=self.material_dim, silhouette=self.silhouette_dim,
            detail=self.detail_dim)
