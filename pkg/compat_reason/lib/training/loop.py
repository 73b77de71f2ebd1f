# -*- coding: UTF-8 -*-
# Copyright 2026 compat-reason contributors
# License: BSD (see file COPYING for details)

"""The training loop.

An epoch has ``ceil(len(records) / batch_size)`` steps.  Every step
builds one graph holding the forward pass of a batch, the gradients
needed by the reason loss, and the loss; then it differentiates the
loss with respect to all parameters and applies :func:`sgd_step
<compat_reason.lib.training.sgd.sgd_step>`.

"""

import csv
import logging
import math

import numpy as np

from compat_reason.lib.autodiff.backward import grad
from compat_reason.lib.autodiff.graph import DiffGraph
from compat_reason.lib.colorfeat.records import stack_records
from compat_reason.lib.compat.exceptions import (
    DatasetError, NonFiniteError, TrainingDiverged)
from compat_reason.lib.compatnet.models import init_model
from compat_reason.lib.evalharness.evaluation import evaluate
from compat_reason.lib.reasoning.loss import batch_loss

from .sampler import BalancedSampler, ShuffleSampler
from .sgd import lr_at, sgd_step

logger = logging.getLogger(__name__)

LOG_FIELDS = ('epoch', 'lr', 'loss', 'judgment_acc', 'reason_acc')


class EpochMetrics(object):

    def __init__(self, epoch, lr, loss, judgment_acc=None, reason_acc=None):
        self.epoch = epoch
        self.lr = lr
        self.loss = loss
        self.judgment_acc = judgment_acc
        self.reason_acc = reason_acc

    def as_row(self):
        return dict((k, getattr(self, k)) for k in LOG_FIELDS)


class TrainResult(object):
    """What :func:`train` returns.

    .. attribute:: model

        The model after the last epoch.

    .. attribute:: log

        One :class:`EpochMetrics` per epoch.

    .. attribute:: best_epoch

        The epoch with the best validation judgment accuracy (reason
        accuracy breaks ties), or `None` without validation.

    """

    def __init__(self, model, log, best_epoch=None):
        self.model = model
        self.log = log
        self.best_epoch = best_epoch


def _take(batch, idx):
    tops, bottoms, judgments, reasons = batch
    return ([t[idx] for t in tops], [b[idx] for b in bottoms],
            judgments[idx], reasons[idx])


def default_loss(config):
    """Return the loss function of the settings in `config` (the
    training :class:`Plugin <compat_reason.lib.training.Plugin>`)."""
    def loss_function(graph, model, params, batch):
        return batch_loss(graph, model, params, batch, config.alpha,
                          config.regularizer)
    return loss_function


def _better(a, b):
    def key(m):
        return (m.judgment_acc,
                -1.0 if m.reason_acc is None else m.reason_acc)
    return b is None or key(a) > key(b)


def train(records, config, model_config=None, model=None, val_records=None,
          loss_function=None, check_finite=True):
    """Train a model on `records` and return a :class:`TrainResult`.

    `config` holds the training settings (see :class:`Plugin
    <compat_reason.lib.training.Plugin>`).  Without a `model`, a new one
    of `model_config` is initialized with the training seed.
    `loss_function(graph, model, params, batch)` replaces the default
    loss (judgment loss plus `alpha` times the reason regularizer).

    The result only depends on the records, the settings and the seed.
    """
    records = list(records)
    if not records:
        raise DatasetError("Cannot train on an empty set of records")
    if model is None:
        model = init_model(model_config, config.seed)
    else:
        model = model.copy()
    if loss_function is None:
        loss_function = default_loss(config)
    data = stack_records(records)
    labels = data[2]
    if config.balanced:
        sampler = BalancedSampler(labels, seed=config.seed)
    else:
        sampler = ShuffleSampler(labels, seed=config.seed)
    steps = int(math.ceil(len(records) / float(config.batch_size)))
    log = []
    best = None
    for epoch in range(config.epochs):
        lr = lr_at(epoch, config.lr0, config.lr_drop_every,
                   config.lr_drop_factor)
        total = 0.0
        for step in range(steps):
            batch = _take(data, sampler.draw(config.batch_size))
            graph = DiffGraph(check_finite=check_finite)
            params = model.param_handles(graph)
            try:
                loss = loss_function(graph, model, params, batch)
                grads = grad(loss, params)
            except NonFiniteError as e:
                raise TrainingDiverged(
                    "Training diverged at epoch %d step %d (lr %g): %s" % (
                        epoch, step, lr, e))
            value = loss.item()
            if not np.isfinite(value):
                raise TrainingDiverged(
                    "Non-finite loss at epoch %d step %d (lr %g)" % (
                        epoch, step, lr))
            logger.debug("epoch %d step %d loss %.6f", epoch, step, value)
            total += value
            model.params = sgd_step(model.params, [g.value for g in grads],
                                    lr, config.weight_decay)
        m = EpochMetrics(epoch, lr, total / steps)
        if val_records and config.eval_every and (
                (epoch + 1) % config.eval_every == 0
                or epoch == config.epochs - 1):
            method = 'multitask' if model.reason_head is not None \
                else 'ours'
            res = evaluate(model, val_records, method)
            m.judgment_acc = res.judgment_acc
            m.reason_acc = res.reason_acc
            if _better(m, best):
                best = m
        logger.info("Epoch %d: lr %g loss %.4f judgment %s reason %s",
                    epoch, lr, m.loss, m.judgment_acc, m.reason_acc)
        log.append(m)
    return TrainResult(model, log, None if best is None else best.epoch)


def write_log(log, filename):
    """Write the per-epoch metrics as CSV."""
    with open(filename, 'w') as fd:
        w = csv.DictWriter(fd, fieldnames=LOG_FIELDS, lineterminator='\n')
        w.writeheader()
        for m in log:
            w.writerow(m.as_row())
    logger.info("Wrote training log to %s", filename)
