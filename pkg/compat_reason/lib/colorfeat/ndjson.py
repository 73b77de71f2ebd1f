# -*- coding: UTF-8 -*-
# Copyright 2026 compat-reason contributors
# License: BSD (see file COPYING for details)

"""Reading and writing feature files.

A feature file has one JSON object per line::

    {"outfit_id": "t0001",
     "top": {"color": [25 numbers], "print": [...], "material": [...],
             "silhouette": [...], "detail": [...]},
     "bottom": {...},
     "judgment": "bad", "reason": "print",
     "attributes": {"print_top": "floral", "print_bottom": "floral"}}

(shown on several lines here for readability).  Numbers are written
with :func:`repr`, so 64-bit values survive a round trip unchanged.

"""

import json
import logging
import math

from compat_reason.lib.compat.choicelists import FACTORS
from compat_reason.lib.compat.exceptions import (
    ColorError, DatasetError, FeatureFileError)

from .foco import ColorFeature
from .records import FactorFeatureSet, OutfitRecord

logger = logging.getLogger(__name__)


def _reject_constant(name):
    raise ValueError("%s is not a number" % name)


class FeatureFileParser(object):
    """Parser for feature files.

    If `dims` is given (a dict as returned by :meth:`Plugin.get_dims
    <compat_reason.lib.colorfeat.Plugin.get_dims>`), every garment is
    checked against it.
    """

    def __init__(self, dims=None):
        self.dims = dims

    def parse_number_list(self, value, what):
        if not isinstance(value, list):
            raise DatasetError("%s must be a list of numbers" % what)
        result = []
        for v in value:
            if isinstance(v, bool) or not isinstance(v, (int, float)):
                raise DatasetError("%s contains %r" % (what, v))
            try:
                v = float(v)
            except OverflowError:
                v = math.inf
            if not math.isfinite(v):
                raise DatasetError("%s contains a non-finite number" % what)
            result.append(v)
        return result

    def parse_garment(self, obj, what):
        """Parse the `top` or `bottom` object."""
        if not isinstance(obj, dict):
            raise DatasetError("%s must be an object" % what)
        unknown = set(obj) - set(FACTORS)
        if unknown:
            raise DatasetError("%s has unknown factors %s" % (
                what, ", ".join(sorted(unknown))))
        kw = dict()
        for f in FACTORS:
            if f not in obj:
                raise DatasetError("%s has no %s feature" % (what, f))
            kw[f] = self.parse_number_list(obj[f], "%s.%s" % (what, f))
        try:
            ColorFeature(kw['color'])
        except ColorError as e:
            raise DatasetError("%s.color: %s" % (what, e))
        garment = FactorFeatureSet(**kw)
        if self.dims is not None:
            garment.check_dims(self.dims)
        return garment

    def parse_record(self, obj):
        if not isinstance(obj, dict):
            raise DatasetError("A record must be a JSON object")
        outfit_id = obj.get('outfit_id')
        if not isinstance(outfit_id, str):
            raise DatasetError("Missing or invalid outfit_id")
        attributes = obj.get('attributes') or {}
        if not isinstance(attributes, dict) or not all(
                isinstance(k, str) and isinstance(v, str)
                for k, v in attributes.items()):
            raise DatasetError("attributes must map strings to strings")
        return OutfitRecord(
            outfit_id,
            self.parse_garment(obj.get('top'), 'top'),
            self.parse_garment(obj.get('bottom'), 'bottom'),
            obj.get('judgment'), obj.get('reason'), attributes)

    def parse(self, lines, filename=None):
        """Yield one :class:`OutfitRecord` per non-empty line.  Lines may
        be given as UTF-8 encoded bytes."""
        for lineno, line in enumerate(lines, 1):
            if isinstance(line, bytes):
                try:
                    line = line.decode('utf-8')
                except UnicodeDecodeError as e:
                    raise FeatureFileError(
                        "Invalid UTF-8 (%s)" % e, filename, lineno)
            line = line.strip()
            if not line:
                continue
            try:
                obj = json.loads(line, parse_constant=_reject_constant)
            except ValueError as e:
                raise FeatureFileError(
                    "Invalid JSON (%s)" % e, filename, lineno)
            try:
                yield self.parse_record(obj)
            except DatasetError as e:
                raise FeatureFileError(str(e), filename, lineno)


def load_feature_records(filename, dims=None):
    """Read all records of the given feature file."""
    p = FeatureFileParser(dims)
    with open(filename, 'rb') as fd:
        records = list(p.parse(fd, filename))
    seen = set()
    for r in records:
        if r.outfit_id in seen:
            logger.warning("%s: duplicate outfit_id %s", filename,
                           r.outfit_id)
        seen.add(r.outfit_id)
    logger.info("Loaded %d records from %s", len(records), filename)
    return records


def record_to_dict(record):
    def garment(g):
        return dict((f, g[f].tolist()) for f in FACTORS)
    return dict(
        outfit_id=record.outfit_id,
        top=garment(record.top),
        bottom=garment(record.bottom),
        judgment=record.judgment,
        reason=record.reason,
        attributes=record.attributes)


def dump_feature_records(records, filename):
    """Write the given records to a feature file."""
    n = 0
    with open(filename, 'w') as fd:
        for r in records:
            fd.write(json.dumps(record_to_dict(r), sort_keys=True))
            fd.write('\n')
            n += 1
    logger.info("Wrote %d records to %s", n, filename)
