# -*- coding: UTF-8 -*-
# Copyright 2026 compat-reason contributors
# License: BSD (see file COPYING for details)

"""The attribute values a synthetic garment can have.

The colors are FOCO codes; their attribute value is the name given by
:func:`color_name <compat_reason.lib.colorfeat.palette.color_name>`.

"""

from compat_reason.lib.colorfeat.foco import FocoCode
from compat_reason.lib.colorfeat.palette import color_name

PRINTS = (
    'solid', 'stripe', 'plaid', 'check', 'floral', 'polka dot', 'animal',
    'camouflage', 'paisley', 'geometric', 'abstract', 'tie-dye', 'letter',
    'graphic')

SILHOUETTES = ('slim', 'straight', 'loose', 'a-line', 'oversized')

DETAILS = (
    'plain', 'ruffle', 'pleat', 'lace', 'button', 'zipper', 'pocket',
    'embroidery')

MATERIALS = (
    'cotton', 'denim', 'linen', 'silk', 'wool', 'leather', 'knit',
    'chiffon', 'polyester', 'velvet')

PALETTE = (
    FocoCode(1, 1, 1),      # black
    FocoCode(1, 1, 6),      # white
    FocoCode(1, 1, 5),      # light grey
    FocoCode(1, 8, 5),      # red
    FocoCode(2, 7, 6),      # orange
    FocoCode(2, 3, 5),      # beige
    FocoCode(3, 7, 6),      # yellow
    FocoCode(5, 7, 4),      # green
    FocoCode(10, 7, 4),     # blue
    FocoCode(10, 7, 2),     # navy
    FocoCode(13, 6, 4),     # purple
    FocoCode(15, 3, 6),     # pink
)

COLORS = tuple(color_name(c) for c in PALETTE)

COLOR_CODES = dict(zip(COLORS, PALETTE))

assert len(set(COLORS)) == len(COLORS)

VALUES = {
    'color': COLORS,
    'print': PRINTS,
    'material': MATERIALS,
    'silhouette': SILHOUETTES,
    'detail': DETAILS,
}
"""The possible values of each factor, in one-hot order."""


def attribute_key(factor, garment):
    """The attribute name of a factor of the top or the bottom.

    >>> attribute_key('print', 'top')
    'print_top'
    """
    return "%s_%s" % (factor, garment)
