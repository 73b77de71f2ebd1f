# -*- coding: UTF-8 -*-
# Copyright 2026 compat-reason contributors
# License: BSD (see file COPYING for details)


"""A rule-based generator of labelled outfits.

Every garment gets a color, a print, a material, a silhouette and a
design detail drawn from a fixed catalog.  A set of rules decides the
label of an outfit from these attributes: a clash rule makes it bad, a
highlight rule makes it good, and an outfit with neither is normal.
The factor of the rule which fired is the reason.

Features are one-hot encodings of the attributes plus Gaussian noise,
and the color feature is built from the FOCO codes of the catalog
colors.

.. autosummary::
   :toctree:

    catalog
    rules
    generator

"""

from compat_reason.lib.compat.plugin import Plugin as BasePlugin


class Plugin(BasePlugin):
    "See :class:`compat_reason.lib.compat.plugin.Plugin`."

    verbose_name = "Synthetic outfits"

    n_train = 5000
    n_val = 1000
    n_test = 1000

    noise = 0.1
    """Standard deviation of the Gaussian noise added to the one-hot
    attribute features."""

    ratio_good = 0.158
    ratio_normal = 0.750
    ratio_bad = 0.092

    ambiguous = False
    """Whether a good or bad outfit may fire more than one rule, as long
    as the rules still give it the drawn label.  By default the
    generator draws again until exactly one rule fires (or none, for
    normal outfits)."""

    max_tries = 1000
    """How many times to draw an outfit before giving up."""

    seed = 0

    def get_ratios(self):
        return (self.ratio_good, self.ratio_normal, self.ratio_bad)
