# -*- coding: UTF-8 -*-
# Copyright 2026 compat-reason contributors
# License: BSD (see file COPYING for details)

"""The fixed vocabularies shared by all plugins.

The order of every tuple is significant: it defines array columns and
the tie-breaking order of every argmax in this package.

>>> JUDGMENTS
('good', 'normal', 'bad')
>>> judgment_index('bad')
2
>>> REASON_FACTORS['design']
('material', 'silhouette', 'detail')

"""

from .exceptions import DatasetError

JUDGMENTS = ('good', 'normal', 'bad')
"""The three judgment levels, in logit order."""

GOOD, NORMAL, BAD = range(3)

REASONS = ('color', 'print', 'design')
"""The reasons a good or bad judgment can have."""

FACTORS = ('color', 'print', 'material', 'silhouette', 'detail')
"""The five factors, in the order of their intra-factor networks."""

REASON_FACTORS = {
    'color': ('color',),
    'print': ('print',),
    'design': ('material', 'silhouette', 'detail'),
}
"""Which factors make up each reason. "design" is the collective name
for material, silhouette and design details."""


def judgment_index(name):
    try:
        return JUDGMENTS.index(name)
    except ValueError:
        raise DatasetError("Unknown judgment %r" % (name,))


def reason_index(name):
    try:
        return REASONS.index(name)
    except ValueError:
        raise DatasetError("Unknown reason %r" % (name,))


def has_reason(judgment):
    """Whether a reason exists for the given judgment name."""
    return judgment != 'normal'
