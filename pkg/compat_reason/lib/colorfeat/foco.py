# -*- coding: UTF-8 -*-
# Copyright 2026 compat-reason contributors
# License: BSD (see file COPYING for details)

"""FOCO color quantization and the 25-dimensional color feature.

>>> foco_quantize(*rgb_to_hsb(1.0, 0.0, 0.0))
FocoCode(h_idx=1, s_idx=8, b_idx=6)
>>> foco_quantize(359.9, 1.0, 1.0)
FocoCode(h_idx=15, s_idx=8, b_idx=6)

"""

import colorsys
import logging
import math
from collections import Counter, namedtuple

import numpy as np

from compat_reason.lib.compat.exceptions import ColorError

logger = logging.getLogger(__name__)

H_LEVELS = 15
S_LEVELS = 8
B_LEVELS = 6

MAJOR_COLORS = 5
BLOCK_SIZE = 5
COLOR_DIM = MAJOR_COLORS * BLOCK_SIZE


class FocoCode(namedtuple('FocoCode', 'h_idx s_idx b_idx')):
    """A FOCO color.  All three indices are 1-based."""

    __slots__ = ()

    def is_valid(self):
        return (1 <= self.h_idx <= H_LEVELS
                and 1 <= self.s_idx <= S_LEVELS
                and 1 <= self.b_idx <= B_LEVELS)

    def center(self):
        """Return the (h, s, b) values in the middle of this bin, hue in
        degrees."""
        return ((self.h_idx - 0.5) * 360.0 / H_LEVELS,
                (self.s_idx - 0.5) / S_LEVELS,
                (self.b_idx - 0.5) / B_LEVELS)

    def encode(self):
        """The three normalized values of a color feature block."""
        return ((self.h_idx - 0.5) / H_LEVELS,
                (self.s_idx - 0.5) / S_LEVELS,
                (self.b_idx - 0.5) / B_LEVELS)

    @classmethod
    def decode(cls, h, s, b):
        """Inverse of :meth:`encode`."""
        return cls(int(round(h * H_LEVELS + 0.5)),
                   int(round(s * S_LEVELS + 0.5)),
                   int(round(b * B_LEVELS + 0.5)))


def _check_unit(name, v):
    if not (0.0 <= v <= 1.0):
        raise ColorError("%s=%r is outside [0, 1]" % (name, v))


def rgb_to_hsb(r, g, b):
    """Convert an RGB color to hue (degrees in [0, 360)), saturation and
    brightness.  The hue of a grey is 0."""
    for name, v in (('r', r), ('g', g), ('b', b)):
        _check_unit(name, v)
    h, s, v = colorsys.rgb_to_hsv(r, g, b)
    h = (h * 360.0) % 360.0
    return (h, s, v)


def foco_quantize(h, s, b):
    if not (0.0 <= h < 360.0):
        raise ColorError("hue=%r is outside [0, 360)" % (h,))
    _check_unit('saturation', s)
    _check_unit('brightness', b)
    return FocoCode(
        min(int(math.floor(h / 24.0)) + 1, H_LEVELS),
        min(int(math.floor(s * S_LEVELS)) + 1, S_LEVELS),
        min(int(math.floor(b * B_LEVELS)) + 1, B_LEVELS))


def color_histogram(pixels):
    """Return a dict mapping each FOCO code present in `pixels` to the
    fraction of pixels having it.

    `pixels` is a sequence of (r, g, b) triples in [0, 1] or an array of
    shape (n, 3).
    """
    counts = Counter()
    n = 0
    for r, g, b in pixels:
        counts[foco_quantize(*rgb_to_hsb(float(r), float(g), float(b)))] += 1
        n += 1
    if n == 0:
        raise ColorError("Cannot compute the histogram of zero pixels")
    return dict((code, c / float(n)) for code, c in counts.items())


class ColorFeature(object):
    """The 25-dimensional color feature of a garment.

    .. attribute:: values

        A read-only numpy array of length 25: five blocks of (h, s, b,
        ratio, presence), major colors first.  Absent blocks are zero.

    """

    def __init__(self, values):
        values = np.array(values, dtype=np.float64)
        if values.shape != (COLOR_DIM,):
            raise ColorError("A color feature has %d values, not %s" % (
                COLOR_DIM, values.shape))
        blocks = values.reshape(MAJOR_COLORS, BLOCK_SIZE)
        ratios = blocks[:, 3]
        presence = blocks[:, 4]
        if not np.all((presence == 0) | (presence == 1)):
            raise ColorError("Presence flags must be 0 or 1")
        if np.any(ratios < 0) or np.any(ratios > 1):
            raise ColorError("Color ratios must be in [0, 1]")
        if np.sum(ratios[presence == 1]) > 1 + 1e-9:
            raise ColorError("Color ratios sum to more than 1")
        if np.any(blocks[presence == 0] != 0):
            raise ColorError("An absent color block must be all zero")
        values.setflags(write=False)
        self.values = values

    @classmethod
    def from_histogram(cls, histogram):
        ranked = sorted(histogram.items(), key=lambda kv: (-kv[1], kv[0]))
        values = np.zeros(COLOR_DIM)
        for i, (code, ratio) in enumerate(ranked[:MAJOR_COLORS]):
            if not code.is_valid():
                raise ColorError("Invalid FOCO code %s" % (code,))
            values[i * BLOCK_SIZE:(i + 1) * BLOCK_SIZE] = \
                code.encode() + (ratio, 1.0)
        if len(ranked) > MAJOR_COLORS:
            logger.debug("Dropped %d minor colors", len(ranked) - MAJOR_COLORS)
        return cls(values)

    def major_colors(self):
        """Return a list of (FocoCode, ratio) for the present blocks."""
        result = []
        for block in self.values.reshape(MAJOR_COLORS, BLOCK_SIZE):
            if block[4] == 1:
                result.append((FocoCode.decode(*block[:3]), float(block[3])))
        return result

    def __repr__(self):
        return "ColorFeature(%s)" % ", ".join(
            "%s:%.3f" % (tuple(c), r) for c, r in self.major_colors())


def build_color_feature(histogram):
    """Encode the five major colors of a histogram as returned by
    :func:`color_histogram`.  Colors with equal ratio are ordered by
    their FOCO code."""
    return ColorFeature.from_histogram(histogram)
