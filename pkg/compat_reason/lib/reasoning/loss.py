# -*- coding: UTF-8 -*-
# Copyright 2026 compat-reason contributors
# License: BSD (see file COPYING for details)

"""The training loss: the judgment cross entropy plus `alpha` times the
reason regularizer of the good and bad samples, averaged over the batch.

Normal samples have no reason and contribute their judgment loss only.
With ``alpha == 0`` the reason part is not built at all, so the loss is
exactly the judgment loss.

"""

import logging

import numpy as np

from compat_reason.lib.autodiff import ops
from compat_reason.lib.autodiff.graph import DiffGraph
from compat_reason.lib.compat.choicelists import NORMAL
from compat_reason.lib.compat.exceptions import ConfigError, DatasetError
from compat_reason.lib.colorfeat.records import stack_records

from .contributions import f_vector
from .regularizers import get_regularizer

logger = logging.getLogger(__name__)


def judgment_loss(y, judgments):
    """Per-row cross entropy of the judgment logits."""
    return ops.softmax_cross_entropy(y, judgments)


def reason_loss(x, y, judgments, reasons, ranges, regularizer):
    """Per-row reason regularizer, zero for rows without a reason."""
    reg = get_regularizer(regularizer)
    judgments = np.asarray(judgments)
    has_reason = judgments != NORMAL
    target = np.where(has_reason, reasons, 0)
    F = f_vector(x, y, judgments, ranges)
    return ops.multiply(reg(F, target),
                        y.graph.constant(has_reason.astype(np.float64)))


def batch_loss(graph, model, params, batch, alpha, regularizer):
    """Build the loss of one batch in `graph` and return its node.

    `params` are the parameter handles of `model` in `graph` and `batch`
    is the result of :func:`stack_records
    <compat_reason.lib.colorfeat.records.stack_records>`.
    """
    if alpha < 0:
        raise ConfigError("alpha must not be negative (got %r)" % alpha)
    tops, bottoms, judgments, reasons = batch
    judgments = np.asarray(judgments, dtype=np.int64)
    if judgments.size == 0:
        raise DatasetError("Cannot compute the loss of an empty batch")
    x, y, r = model.build(graph, params, tops, bottoms)
    per_row = judgment_loss(y, judgments)
    if alpha > 0 and np.any(judgments != NORMAL):
        rl = reason_loss(x, y, judgments, np.asarray(reasons),
                         model.config.reason_ranges(), regularizer)
        per_row = ops.add(per_row, ops.scale(rl, alpha))
    return ops.mean(per_row)


def total_loss(batch, model, alpha, kind, graph=None):
    """Return the loss node of a batch together with the parameter
    handles it depends on: ``(loss, params)``.

    `batch` is a list of :class:`OutfitRecord
    <compat_reason.lib.colorfeat.records.OutfitRecord>` or the result of
    :func:`stack_records
    <compat_reason.lib.colorfeat.records.stack_records>`.
    """
    if not isinstance(batch, tuple):
        batch = list(batch)
        if not batch:
            raise DatasetError("Cannot compute the loss of an empty batch")
        batch = stack_records(batch)
    if graph is None:
        graph = DiffGraph()
    params = model.param_handles(graph)
    return batch_loss(graph, model, params, batch, alpha, kind), params
