# -*- coding: UTF-8 -*-
# Copyright 2026 compat-reason contributors
# License: BSD (see file COPYING for details)

"""Accuracy metrics.

Judgments and reasons may be given as names or as indices.  A missing
reason is `None` or -1.

The reason accuracy only looks at outfits whose ground truth is good or
bad and whose judgment was predicted correctly.  When there are no such
outfits it is undefined and reported as `None`.

>>> judgment_accuracy(['good', 'bad', 'normal', 'bad'],
...                   ['good', 'bad', 'normal', 'good'])
75.0
>>> reason_accuracy([('good', 'color'), ('bad', 'print')],
...                 [('good', 'color'), ('bad', 'design')])
50.0

"""

import logging

import numpy as np

from compat_reason.lib.compat.choicelists import (
    JUDGMENTS, REASONS, NORMAL)
from compat_reason.lib.compat.exceptions import DatasetError

logger = logging.getLogger(__name__)


def _judgment_idx(j):
    if isinstance(j, str):
        return JUDGMENTS.index(j)
    return int(j)


def _reason_idx(r):
    if r is None:
        return -1
    if isinstance(r, str):
        return REASONS.index(r)
    return int(r)


def judgment_accuracy(preds, gts):
    """Percentage of correctly predicted judgments."""
    preds = [_judgment_idx(p) for p in preds]
    gts = [_judgment_idx(g) for g in gts]
    if len(preds) != len(gts):
        raise DatasetError("%d predictions for %d samples" % (
            len(preds), len(gts)))
    if not gts:
        raise DatasetError("Cannot compute the accuracy of zero samples")
    correct = sum(1 for p, g in zip(preds, gts) if p == g)
    return 100.0 * correct / len(gts)


class ReasonCounter(object):
    """Counts reason predictions one outfit at a time."""

    def __init__(self):
        self.considered = 0
        self.correct = 0

    def add(self, pred_judgment, pred_reason, gt_judgment, gt_reason):
        gt_j = _judgment_idx(gt_judgment)
        if gt_j == NORMAL or _judgment_idx(pred_judgment) != gt_j:
            return
        self.considered += 1
        if _reason_idx(pred_reason) == _reason_idx(gt_reason):
            self.correct += 1

    @property
    def accuracy(self):
        if self.considered == 0:
            return None
        return 100.0 * self.correct / self.considered


def reason_accuracy(preds, gts):
    """Percentage of correct reasons among the good or bad outfits with
    a correct judgment.  `preds` and `gts` are sequences of (judgment,
    reason) pairs."""
    preds = list(preds)
    gts = list(gts)
    if len(preds) != len(gts):
        raise DatasetError("%d predictions for %d samples" % (
            len(preds), len(gts)))
    kept = [(p, g) for p, g in zip(preds, gts)
            if _judgment_idx(g[0]) != NORMAL
            and _judgment_idx(p[0]) == _judgment_idx(g[0])]
    if not kept:
        logger.warning("Reason accuracy is undefined: no correctly "
                       "judged good or bad outfit")
        return None
    correct = sum(1 for p, g in kept
                  if _reason_idx(p[1]) == _reason_idx(g[1]))
    return 100.0 * correct / len(kept)


def confusion_matrix(preds, gts):
    """A 3x3 array counting outfits by ground truth (rows) and
    prediction (columns)."""
    m = np.zeros((len(JUDGMENTS), len(JUDGMENTS)), dtype=np.int64)
    for p, g in zip(preds, gts):
        m[_judgment_idx(g), _judgment_idx(p)] += 1
    return m


def mean_std(values):
    """Mean and standard deviation of the defined values, or (None,
    None) if there are none.  The deviation is that of a sample (zero
    for a single value)."""
    values = [v for v in values if v is not None]
    if not values:
        return None, None
    a = np.asarray(values, dtype=np.float64)
    std = float(np.std(a, ddof=1)) if len(a) > 1 else 0.0
    return float(np.mean(a)), std
