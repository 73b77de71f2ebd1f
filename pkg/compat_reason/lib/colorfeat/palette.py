# -*- coding: UTF-8 -*-
# Copyright 2026 compat-reason contributors
# License: BSD (see file COPYING for details)

"""Human-readable names of FOCO colors, used in explanations.

>>> from compat_reason.lib.colorfeat.foco import FocoCode
>>> color_name(FocoCode(1, 8, 4))
'red'
>>> color_name(FocoCode(10, 2, 6))
'pale blue'
>>> color_name(FocoCode(4, 1, 6))
'white'

"""

from .foco import FocoCode, H_LEVELS

HUE_NAMES = (
    'red',          # 0-24 degrees
    'orange',
    'yellow',
    'lime',
    'green',
    'emerald',
    'mint',
    'cyan',
    'azure',
    'blue',
    'indigo',
    'violet',
    'purple',
    'magenta',
    'rose',         # 336-360 degrees
)

assert len(HUE_NAMES) == H_LEVELS


def color_name(code):
    """Return a short English name for the given :class:`FocoCode`."""
    code = FocoCode(*code)
    if code.b_idx == 1:
        return 'black'
    if code.s_idx == 1:
        if code.b_idx == 6:
            return 'white'
        if code.b_idx >= 4:
            return 'light grey'
        return 'dark grey'
    name = HUE_NAMES[code.h_idx - 1]
    if code.b_idx == 2:
        return 'dark ' + name
    if code.s_idx <= 3:
        return 'pale ' + name
    return name


def major_color_name(feature):
    """Return the name of the first major color of a :class:`ColorFeature
    <compat_reason.lib.colorfeat.foco.ColorFeature>`, or `None` if it
    has no color at all."""
    colors = feature.major_colors()
    if not colors:
        return None
    return color_name(colors[0][0])
