# -*- coding: UTF-8 -*-
# Copyright 2026 compat-reason contributors
# License: BSD (see file COPYING for details)

"""Predicting and scoring judgments and reasons on a set of records."""

import logging

import numpy as np

from compat_reason.lib.autodiff.graph import DiffGraph
from compat_reason.lib.colorfeat.records import stack_records
from compat_reason.lib.compat.choicelists import NORMAL
from compat_reason.lib.compat.exceptions import ConfigError, DatasetError
from compat_reason.lib.compatnet.models import forward_batch
from compat_reason.lib.reasoning.contributions import (
    FORMULATIONS, predict_reasons)

from .metrics import judgment_accuracy, reason_accuracy, confusion_matrix

logger = logging.getLogger(__name__)

METHODS = ('ours', 'ifiv', 'multitask') + FORMULATIONS
"""How reasons can be predicted.  ``ours`` scores reasons by positive
contribution difference (the same as ``F6``), ``ifiv`` by the mean
contribution to the predicted judgment (the same as ``F1``), and
``multitask`` uses the reason head of the model."""

CHUNK_SIZE = 512


def _formulation(method):
    if method == 'ours':
        return 'F6'
    if method == 'ifiv':
        return 'F1'
    if method in FORMULATIONS:
        return method
    return None


def predict(model, records, method='ours'):
    """Return two int arrays: the predicted judgment and the predicted
    reason (-1 for outfits predicted normal) of each record."""
    if method not in METHODS:
        raise ConfigError("Unknown method %r (expected one of %s)" % (
            method, ", ".join(METHODS)))
    if method == 'multitask' and model.reason_head is None:
        raise ConfigError("The multitask method needs a model with a "
                          "reason head")
    records = list(records)
    if not records:
        raise DatasetError("Nothing to evaluate")
    ranges = model.config.reason_ranges()
    judgments = []
    reasons = []
    for start in range(0, len(records), CHUNK_SIZE):
        chunk = stack_records(records[start:start + CHUNK_SIZE])
        fp = forward_batch(model, chunk, DiffGraph())
        formulation = _formulation(method)
        if formulation is None:
            j = np.argmax(fp.y.value, axis=-1)
            r = np.argmax(fp.reason_logits.value, axis=-1)
            r[j == NORMAL] = -1
        else:
            j = np.argmax(fp.y.value, axis=-1)
            r = predict_reasons(fp.x, fp.y, formulation, ranges)
        judgments.append(j)
        reasons.append(r)
    return np.concatenate(judgments), np.concatenate(reasons)


class EvalResult(object):
    """The scores of one model on one set of records.

    .. attribute:: judgment_acc
    .. attribute:: reason_acc

        A percentage, or `None` when undefined.

    .. attribute:: confusion

        3x3 counts, ground truth by prediction.

    """

    def __init__(self, method, judgment_acc, reason_acc, confusion,
                 pred_judgments, pred_reasons):
        self.method = method
        self.judgment_acc = judgment_acc
        self.reason_acc = reason_acc
        self.confusion = confusion
        self.pred_judgments = pred_judgments
        self.pred_reasons = pred_reasons

    def __repr__(self):
        return "EvalResult(%s, judgment_acc=%s, reason_acc=%s)" % (
            self.method, self.judgment_acc, self.reason_acc)

    def as_row(self):
        return dict(method=self.method, judgment_acc=self.judgment_acc,
                    reason_acc=self.reason_acc)


def evaluate(model, records, method='ours'):
    """Predict all records and return an :class:`EvalResult`."""
    records = list(records)
    pj, pr = predict(model, records, method)
    gt_j = [r.judgment_idx for r in records]
    gt_r = [r.reason_idx for r in records]
    reason_acc = reason_accuracy(zip(pj, pr), zip(gt_j, gt_r))
    result = EvalResult(
        method, judgment_accuracy(pj, gt_j), reason_acc,
        confusion_matrix(pj, gt_j), pj, pr)
    logger.debug("%s on %d records: %s", method, len(records), result)
    return result


def run_method(model, dataset, method='ours'):
    """Evaluate `model` on the test sets of `dataset`.  Returns a dict
    mapping ``test`` (and ``test_random`` when the dataset has one) to an
    :class:`EvalResult`."""
    results = dict()
    results['test'] = evaluate(model, dataset.test, method)
    if getattr(dataset, 'test_random', None):
        results['test_random'] = evaluate(model, dataset.test_random, method)
    return results
