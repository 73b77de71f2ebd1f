# -*- coding: UTF-8 -*-
# Copyright 2026 compat-reason contributors
# License: BSD (see file COPYING for details)

"""The baselines of the method comparison."""

import logging

import numpy as np

from compat_reason.lib.autodiff import ops
from compat_reason.lib.compat.choicelists import REASONS, NORMAL
from compat_reason.lib.compatnet.models import forward
from compat_reason.lib.reasoning.contributions import formulation_score
from compat_reason.lib.reasoning.loss import judgment_loss
from compat_reason.lib.training.loop import train

logger = logging.getLogger(__name__)


def baseline_ifiv(model, record):
    """The reason of one outfit read out by the mean contribution of each
    reason to the predicted judgment, without comparing to normal.
    `None` when the outfit is predicted normal."""
    fp = forward(model, record)
    j = int(np.argmax(fp.y.value))
    if j == NORMAL:
        return None
    scores = formulation_score(fp.x, fp.y, j, 'F1',
                               model.config.reason_ranges())
    return REASONS[int(np.argmax(scores.value))]


def baseline_noreg(records, config, model_config, val_records=None, **kw):
    """Train without reason supervision (``alpha = 0``).  Other keyword
    arguments go to :func:`train
    <compat_reason.lib.training.loop.train>`."""
    return train(records, config.copy(alpha=0.0), model_config,
                 val_records=val_records, **kw)


def multitask_loss(graph, model, params, batch):
    """Judgment cross entropy plus reason cross entropy of the reason
    head on the outfits which have a reason."""
    tops, bottoms, judgments, reasons = batch
    x, y, r = model.build(graph, params, tops, bottoms)
    per_row = judgment_loss(y, judgments)
    has_reason = np.asarray(reasons) >= 0
    if np.any(has_reason):
        rl = ops.softmax_cross_entropy(r, np.where(has_reason, reasons, 0))
        per_row = ops.add(per_row, ops.multiply(
            rl, graph.constant(has_reason.astype(np.float64))))
    return ops.mean(per_row)


def baseline_multitask(records, config, model_config, val_records=None,
                       **kw):
    """Train a model with a reason head on the judgment and reason cross
    entropies."""
    return train(records, config, model_config.replace(reason_head=True),
                 val_records=val_records, loss_function=multitask_loss, **kw)
