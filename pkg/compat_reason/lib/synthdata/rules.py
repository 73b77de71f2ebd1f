# -*- coding: UTF-8 -*-
# Copyright 2026 compat-reason contributors
# License: BSD (see file COPYING for details)

"""The rules which label a synthetic outfit.

A rule looks at one factor of the top and the same factor of the
bottom.  It fires when the pair of their values is one of its pairs.

"""

import logging
from collections import namedtuple

from compat_reason.lib.compat.choicelists import REASONS, REASON_FACTORS
from compat_reason.lib.compat.exceptions import DatasetError

from .catalog import VALUES, attribute_key

logger = logging.getLogger(__name__)

CLASH = 'clash'
HIGHLIGHT = 'highlight'


class Rule(namedtuple('Rule', 'name kind factor pairs')):
    """A clash or highlight rule.

    .. attribute:: pairs

        A tuple of (top value, bottom value) pairs, sorted.

    """

    __slots__ = ()

    @property
    def reason(self):
        for r in REASONS:
            if self.factor in REASON_FACTORS[r]:
                return r

    @property
    def judgment(self):
        return 'bad' if self.kind == CLASH else 'good'

    def fires(self, attributes):
        pair = (attributes[attribute_key(self.factor, 'top')],
                attributes[attribute_key(self.factor, 'bottom')])
        return pair in self.pairs

    def plant(self, attributes, pair):
        """Set the attributes of this rule's factor to `pair`."""
        attributes[attribute_key(self.factor, 'top')] = pair[0]
        attributes[attribute_key(self.factor, 'bottom')] = pair[1]


def make_rule(name, kind, factor, pairs, symmetric=True):
    pairs = set(tuple(p) for p in pairs)
    if symmetric:
        pairs |= set((b, a) for a, b in pairs)
    for a, b in pairs:
        if a not in VALUES[factor] or b not in VALUES[factor]:
            raise DatasetError("Rule %s: unknown %s value in %r" % (
                name, factor, (a, b)))
    return Rule(name, kind, factor, tuple(sorted(pairs)))


def _product(values):
    return [(a, b) for a in values for b in values]


BUSY_PRINTS = ('floral', 'plaid', 'animal', 'paisley', 'camouflage',
               'tie-dye', 'polka dot', 'geometric')


class RuleSet(object):
    """An ordered collection of rules."""

    def __init__(self, rules):
        self.rules = tuple(rules)
        names = [r.name for r in self.rules]
        if len(set(names)) != len(names):
            raise DatasetError("Duplicate rule names in %s" % names)

    def __iter__(self):
        return iter(self.rules)

    def get_rules(self, kind, reason=None):
        return [r for r in self.rules
                if r.kind == kind and (reason is None or r.reason == reason)]

    def fired(self, attributes):
        return [r for r in self.rules if r.fires(attributes)]


def default_ruleset():
    return RuleSet([
        make_rule('color-clash', CLASH, 'color', [
            ('red', 'green'), ('orange', 'purple'), ('red', 'pale rose'),
            ('yellow', 'purple'), ('green', 'purple')]),
        make_rule('print-clash', CLASH, 'print', _product(BUSY_PRINTS)),
        make_rule('material-clash', CLASH, 'material', [
            ('leather', 'leather'), ('velvet', 'denim'),
            ('chiffon', 'wool')]),
        make_rule('silhouette-clash', CLASH, 'silhouette', [
            ('oversized', 'oversized'), ('oversized', 'loose'),
            ('loose', 'loose')]),
        make_rule('detail-clash', CLASH, 'detail', [
            ('ruffle', 'ruffle'), ('lace', 'embroidery')]),
        make_rule('color-highlight', HIGHLIGHT, 'color', [
            ('dark blue', 'white'), ('black', 'red'),
            ('pale orange', 'dark blue'), ('light grey', 'pale rose'),
            ('black', 'white')]),
        make_rule('print-highlight', HIGHLIGHT, 'print', [
            ('stripe', 'solid'), ('graphic', 'solid'), ('letter', 'solid'),
            ('solid', 'floral'), ('solid', 'polka dot')], symmetric=False),
        make_rule('material-highlight', HIGHLIGHT, 'material', [
            ('knit', 'leather'), ('silk', 'denim')], symmetric=False),
        make_rule('silhouette-highlight', HIGHLIGHT, 'silhouette', [
            ('slim', 'a-line'), ('loose', 'slim')], symmetric=False),
        make_rule('detail-highlight', HIGHLIGHT, 'detail', [
            ('lace', 'plain'), ('embroidery', 'plain')], symmetric=False),
    ])


def label_outfit(attributes, ruleset=None):
    """Return (judgment, reason, fired rules) for the given attributes.

    A clash makes the outfit bad whatever highlights it has.  When
    several rules of the deciding kind fire, the reason is the first one
    in the order color, print, design.
    """
    if ruleset is None:
        ruleset = default_ruleset()
    fired = ruleset.fired(attributes)
    for kind in (CLASH, HIGHLIGHT):
        reasons = set(r.reason for r in fired if r.kind == kind)
        if reasons:
            reason = [r for r in REASONS if r in reasons][0]
            judgment = 'bad' if kind == CLASH else 'good'
            return judgment, reason, fired
    return 'normal', None, fired
