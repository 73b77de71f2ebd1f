# -*- coding: UTF-8 -*-
# Copyright 2026 compat-reason contributors
# License: BSD (see file COPYING for details)

"""The in-memory form of an outfit sample."""

import numpy as np

from compat_reason.lib.compat.choicelists import (
    FACTORS, JUDGMENTS, REASONS, judgment_index, reason_index)
from compat_reason.lib.compat.exceptions import DatasetError


class FactorFeatureSet(object):
    """The five factor feature vectors of one garment.

    Instantiate it with one keyword per factor::

        FactorFeatureSet(color=c, print=p, material=m,
                         silhouette=s, detail=d)

    """

    def __init__(self, **features):
        missing = [f for f in FACTORS if f not in features]
        if missing:
            raise DatasetError("Missing factor features: %s" % ", ".join(
                missing))
        unknown = [k for k in features if k not in FACTORS]
        if unknown:
            raise DatasetError("Unknown factors: %s" % ", ".join(unknown))
        self.features = dict()
        for f in FACTORS:
            v = np.array(features[f], dtype=np.float64)
            if v.ndim != 1:
                raise DatasetError("The %s feature must be a vector" % f)
            v.setflags(write=False)
            self.features[f] = v

    def __getitem__(self, factor):
        return self.features[factor]

    def dims(self):
        return dict((f, self.features[f].shape[0]) for f in FACTORS)

    def check_dims(self, dims):
        for f in FACTORS:
            if self.features[f].shape[0] != dims[f]:
                raise DatasetError(
                    "%s feature has %d values, expected %d" % (
                        f, self.features[f].shape[0], dims[f]))

    def replace(self, **features):
        """Return a copy with some factors replaced."""
        kw = dict(self.features)
        kw.update(features)
        return FactorFeatureSet(**kw)


class OutfitRecord(object):
    """One top and one bottom with their labels.

    .. attribute:: judgment

        One of :data:`JUDGMENTS
        <compat_reason.lib.compat.choicelists.JUDGMENTS>`.

    .. attribute:: reason

        One of :data:`REASONS <compat_reason.lib.compat.choicelists.REASONS>`,
        or `None` if and only if the judgment is normal.

    .. attribute:: attributes

        A dict of strings describing the garments (e.g. ``print_top``),
        used to fill explanation templates.

    """

    def __init__(self, outfit_id, top, bottom, judgment, reason=None,
                 attributes=None):
        if judgment not in JUDGMENTS:
            raise DatasetError("Unknown judgment %r" % (judgment,))
        if judgment == 'normal':
            if reason is not None:
                raise DatasetError(
                    "A normal outfit cannot have a reason (got %r)" % reason)
        elif reason not in REASONS:
            raise DatasetError(
                "A %s outfit needs a reason, got %r" % (judgment, reason))
        self.outfit_id = outfit_id
        self.top = top
        self.bottom = bottom
        self.judgment = judgment
        self.reason = reason
        self.attributes = dict(attributes or {})

    def __repr__(self):
        return "OutfitRecord(%r, %s, %s)" % (
            self.outfit_id, self.judgment, self.reason)

    @property
    def judgment_idx(self):
        return judgment_index(self.judgment)

    @property
    def reason_idx(self):
        """The index of the reason, -1 for a normal outfit."""
        if self.reason is None:
            return -1
        return reason_index(self.reason)


def stack_records(records):
    """Return the arrays of a batch: two lists (tops and bottoms) of one
    (n, d) matrix per factor, the judgment indices and the reason indices
    (-1 where there is no reason)."""
    records = list(records)
    if not records:
        raise DatasetError("Cannot stack an empty list of records")
    tops = [np.stack([r.top[f] for r in records]) for f in FACTORS]
    bottoms = [np.stack([r.bottom[f] for r in records]) for f in FACTORS]
    judgments = np.array([r.judgment_idx for r in records], dtype=np.int64)
    reasons = np.array([r.reason_idx for r in records], dtype=np.int64)
    return tops, bottoms, judgments, reasons
