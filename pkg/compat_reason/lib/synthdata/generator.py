# -*- coding: UTF-8 -*-
# Copyright 2026 compat-reason contributors
# License: BSD (see file COPYING for details)

"""Drawing synthetic outfits and writing them as feature files.

The judgments are drawn in exact proportions (up to rounding): a list
with the requested number of good, normal and bad targets is shuffled,
and for each target the generator plants a rule of a random reason and
draws the remaining attributes until the rules give exactly that
label.  The label of a record is always what :func:`label_outfit
<compat_reason.lib.synthdata.rules.label_outfit>` says about its
attributes.

"""

import logging
import os

import numpy as np

from compat_reason.lib.colorfeat.foco import ColorFeature, COLOR_DIM
from compat_reason.lib.colorfeat.ndjson import (
    dump_feature_records, load_feature_records)
from compat_reason.lib.colorfeat.records import FactorFeatureSet, OutfitRecord
from compat_reason.lib.compat.choicelists import FACTORS, JUDGMENTS, REASONS
from compat_reason.lib.compat.exceptions import DatasetError

from .catalog import COLOR_CODES, PALETTE, VALUES, attribute_key
from .rules import CLASH, HIGHLIGHT, default_ruleset, label_outfit

logger = logging.getLogger(__name__)

SPLITS = ('train', 'val', 'test')

MAIN_COLOR_RATIO = 0.8


def default_dims():
    dims = dict((f, len(VALUES[f])) for f in FACTORS)
    dims['color'] = COLOR_DIM
    return dims


def check_ratios(ratios):
    ratios = tuple(float(r) for r in ratios)
    if len(ratios) != len(JUDGMENTS) or min(ratios) < 0 \
            or abs(sum(ratios) - 1.0) > 1e-6:
        raise DatasetError(
            "Infeasible class ratios %r (need three non-negative values "
            "summing to 1)" % (ratios,))
    return ratios


def class_counts(n, ratios):
    """Split `n` into good, normal and bad counts (normal takes the
    rounding remainder)."""
    good, normal, bad = check_ratios(ratios)
    n_good = int(round(n * good))
    n_bad = int(round(n * bad))
    n_normal = n - n_good - n_bad
    if n_normal < 0 or (n_normal == 0 and normal > 0 and n > 0):
        raise DatasetError("Cannot split %d outfits by %r" % (n, ratios))
    return n_good, n_normal, n_bad


def random_attributes(rng):
    attrs = dict()
    for garment in ('top', 'bottom'):
        for f in FACTORS:
            values = VALUES[f]
            attrs[attribute_key(f, garment)] = values[
                int(rng.integers(len(values)))]
    return attrs


def draw_attributes(judgment, rng, ruleset, ambiguous=False,
                    max_tries=1000):
    """Return attributes which the rules label with `judgment`."""
    if judgment == 'normal':
        for i in range(max_tries):
            attrs = random_attributes(rng)
            if not ruleset.fired(attrs):
                return attrs
    else:
        kind = CLASH if judgment == 'bad' else HIGHLIGHT
        reason = REASONS[int(rng.integers(len(REASONS)))]
        rules = ruleset.get_rules(kind, reason)
        if not rules:
            raise DatasetError("No %s rule for reason %s" % (kind, reason))
        for i in range(max_tries):
            attrs = random_attributes(rng)
            rule = rules[int(rng.integers(len(rules)))]
            rule.plant(attrs, rule.pairs[int(rng.integers(len(rule.pairs)))])
            j, r, fired = label_outfit(attrs, ruleset)
            if j == judgment and (ambiguous or len(fired) == 1):
                return attrs
    raise DatasetError("Could not draw a %s outfit in %d tries" % (
        judgment, max_tries))


def garment_features(attrs, garment, dims, noise, rng):
    """Return the :class:`FactorFeatureSet
    <compat_reason.lib.colorfeat.records.FactorFeatureSet>` of the top
    or the bottom described by `attrs`."""
    kw = dict()
    main = COLOR_CODES[attrs[attribute_key('color', garment)]]
    others = [c for c in PALETTE if c != main]
    second = others[int(rng.integers(len(others)))]
    ratio = float(np.clip(MAIN_COLOR_RATIO + noise * rng.normal(),
                          0.55, 0.95))
    kw['color'] = ColorFeature.from_histogram(
        {main: ratio, second: 1.0 - ratio}).values
    for f in FACTORS[1:]:
        values = VALUES[f]
        if dims[f] < len(values):
            raise DatasetError("%s features need at least %d values" % (
                f, len(values)))
        v = np.zeros(dims[f])
        v[values.index(attrs[attribute_key(f, garment)])] = 1.0
        kw[f] = v + noise * rng.normal(size=dims[f])
    return FactorFeatureSet(**kw)


def make_record(outfit_id, attrs, dims, noise, rng, ruleset):
    judgment, reason, fired = label_outfit(attrs, ruleset)
    return OutfitRecord(
        outfit_id,
        garment_features(attrs, 'top', dims, noise, rng),
        garment_features(attrs, 'bottom', dims, noise, rng),
        judgment, reason, attrs)


def generate_records(n, prefix, rng, ruleset=None, ratios=(0.158, 0.75, 0.092),
                     dims=None, noise=0.1, ambiguous=False, max_tries=1000):
    if ruleset is None:
        ruleset = default_ruleset()
    if dims is None:
        dims = default_dims()
    counts = class_counts(n, ratios)
    targets = []
    for judgment, count in zip(JUDGMENTS, counts):
        targets += [judgment] * count
    targets = [targets[i] for i in rng.permutation(len(targets))]
    records = []
    for i, judgment in enumerate(targets):
        attrs = draw_attributes(judgment, rng, ruleset, ambiguous, max_tries)
        records.append(make_record(
            "%s-%05d" % (prefix, i + 1), attrs, dims, noise, rng, ruleset))
    return records


class Dataset(object):
    """The train, validation and test splits of a synthetic dataset,
    and optionally the randomly paired test set."""

    def __init__(self, train, val, test, test_random=None):
        self.train = train
        self.val = val
        self.test = test
        self.test_random = test_random

    def splits(self):
        yield 'train', self.train
        yield 'val', self.val
        yield 'test', self.test
        if self.test_random is not None:
            yield 'test_random', self.test_random


def generate_dataset(config, seed=None, dims=None, ruleset=None):
    """Generate the splits described by `config` (the :class:`Plugin
    <compat_reason.lib.synthdata.Plugin>` of this package).

    The result only depends on the settings and the seed.
    """
    if seed is None:
        seed = config.seed
    if ruleset is None:
        ruleset = default_ruleset()
    ratios = check_ratios(config.get_ratios())
    rng = np.random.default_rng(seed)
    kw = dict(ratios=ratios, dims=dims, noise=config.noise,
              ambiguous=config.ambiguous, max_tries=config.max_tries)
    parts = [generate_records(getattr(config, 'n_' + name), name, rng,
                              ruleset, **kw)
             for name in SPLITS]
    logger.info("Generated %d/%d/%d outfits (seed %d)",
                len(parts[0]), len(parts[1]), len(parts[2]), seed)
    return Dataset(*parts)


def relabel(outfit_id, top, bottom, attrs, ruleset):
    judgment, reason, fired = label_outfit(attrs, ruleset)
    return OutfitRecord(outfit_id, top, bottom, judgment, reason, attrs)


def _garment_attributes(attrs, garment):
    return dict((attribute_key(f, garment), attrs[attribute_key(f, garment)])
                for f in FACTORS)


def make_test_random(records, seed, ruleset=None):
    """Pair the tops and bottoms of `records` at random and label the
    new outfits with the rules."""
    if ruleset is None:
        ruleset = default_ruleset()
    rng = np.random.default_rng(seed)
    perm = rng.permutation(len(records))
    result = []
    for i, j in enumerate(perm):
        a, b = records[i], records[int(j)]
        attrs = _garment_attributes(a.attributes, 'top')
        attrs.update(_garment_attributes(b.attributes, 'bottom'))
        result.append(relabel("random-%05d" % (i + 1), a.top, b.bottom,
                              attrs, ruleset))
    return result


def swap_factor(record, donor, factor, ruleset=None):
    """Return a copy of `record` whose top has the `factor` of the top of
    `donor`, labelled again."""
    if factor not in FACTORS:
        raise DatasetError("Unknown factor %r" % (factor,))
    if ruleset is None:
        ruleset = default_ruleset()
    key = attribute_key(factor, 'top')
    attrs = dict(record.attributes)
    attrs[key] = donor.attributes[key]
    top = record.top.replace(**{factor: donor.top[factor]})
    return relabel("%s~%s" % (record.outfit_id, factor), top,
                   record.bottom, attrs, ruleset)


def class_mix(records):
    """Percentage of each judgment in `records` (zeros when there are
    none)."""
    if not records:
        return (0.0,) * len(JUDGMENTS)
    n = float(len(records))
    return tuple(100.0 * sum(1 for r in records if r.judgment == j) / n
                 for j in JUDGMENTS)


def write_dataset(dataset, dirname):
    """Write one feature file per split into `dirname`."""
    if not os.path.isdir(dirname):
        os.makedirs(dirname)
    filenames = []
    for name, records in dataset.splits():
        fn = os.path.join(dirname, name + '.ndjson')
        dump_feature_records(records, fn)
        filenames.append(fn)
    return filenames


def read_dataset(dirname, dims=None):
    """Read the feature files written by :func:`write_dataset`.  The
    ``test_random`` file is optional, the others are required."""
    parts = dict()
    for name in SPLITS + ('test_random',):
        fn = os.path.join(dirname, name + '.ndjson')
        if not os.path.isfile(fn):
            if name == 'test_random':
                continue
            raise DatasetError("Missing feature file %s" % fn)
        parts[name] = load_feature_records(fn, dims)
    return Dataset(parts['train'], parts['val'], parts['test'],
                   parts.get('test_random'))
