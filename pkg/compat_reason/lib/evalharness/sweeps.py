# -*- coding: UTF-8 -*-
# Copyright 2026 compat-reason contributors
# License: BSD (see file COPYING for details)

"""Repeated training runs: the alpha sweep, the formulation ablation and
the method comparison.

Every function takes a dataset with ``train``, ``val``, ``test`` and
optionally ``test_random`` record lists (see :class:`Dataset
<compat_reason.lib.synthdata.generator.Dataset>`), the training
settings and the model dimensions.  Runs are independent and executed
by :class:`joblib.Parallel`, which keeps their order, so a report does
not depend on the number of workers.

"""

import logging
import os

from joblib import Parallel, delayed

from compat_reason.lib.compat.exceptions import ConfigError
from compat_reason.lib.reasoning.contributions import FORMULATIONS
from compat_reason.lib.training.loop import train

from .baselines import baseline_noreg, baseline_multitask
from .evaluation import run_method
from .reports import RunReport

logger = logging.getLogger(__name__)

THREADS_VARIABLE = 'COMPAT_REASON_THREADS'


def n_threads():
    """The number of parallel workers."""
    v = os.environ.get(THREADS_VARIABLE, '1')
    try:
        n = int(v)
    except ValueError:
        n = 0
    if n < 1:
        raise ConfigError("%s must be a positive integer (got %r)" % (
            THREADS_VARIABLE, v))
    return n


def run_jobs(jobs):
    """Run a list of (function, args) pairs and return their results in
    order."""
    n = n_threads()
    logger.info("Running %d jobs on %d workers", len(jobs), n)
    return Parallel(n_jobs=n)(delayed(func)(*args) for func, args in jobs)


def evaluate_rows(model, dataset, methods, **fields):
    """Evaluate `model` with each method on the test sets, returning one
    row per method and test set."""
    rows = []
    for method in methods:
        for split, res in run_method(model, dataset, method).items():
            row = dict(fields)
            row.update(method=method, split=split,
                       judgment_acc=res.judgment_acc,
                       reason_acc=res.reason_acc)
            rows.append(row)
    return rows


def train_run(dataset, config, model_config, seed, alpha, regularizer):
    """Train one model.  Returns the :class:`TrainResult
    <compat_reason.lib.training.loop.TrainResult>`."""
    cfg = config.copy(seed=seed, alpha=alpha, regularizer=regularizer)
    logger.info("Training seed %d alpha %g %s", seed, alpha, regularizer)
    if alpha == 0:
        return baseline_noreg(dataset.train, cfg, model_config,
                              val_records=dataset.val)
    return train(dataset.train, cfg, model_config, val_records=dataset.val)


def _alpha_job(dataset, config, model_config, seed, alpha, regularizers):
    # alpha 0 does not depend on the regularizer: train once, report
    # the same numbers for each
    if alpha == 0:
        result = train_run(dataset, config, model_config, seed, 0.0,
                           regularizers[0])
        rows = []
        for reg in regularizers:
            rows += evaluate_rows(result.model, dataset, ['ours'],
                                  regularizer=reg, alpha=0.0, seed=seed,
                                  best_epoch=result.best_epoch)
        return rows
    result = train_run(dataset, config, model_config, seed, alpha,
                       regularizers[0])
    return evaluate_rows(result.model, dataset, ['ours'],
                         regularizer=regularizers[0], alpha=alpha,
                         seed=seed, best_epoch=result.best_epoch)


def seeds_from(config, repetitions):
    return [config.seed + k for k in range(repetitions)]


def sweep_alpha(grid, dataset, config, model_config, regularizers=('ce',),
                repetitions=1):
    """Train with every alpha of `grid` and every regularizer and return
    a :class:`RunReport <compat_reason.lib.evalharness.reports.RunReport>`
    with one row per run and test set."""
    regularizers = tuple(regularizers)
    jobs = []
    for seed in seeds_from(config, repetitions):
        for alpha in grid:
            alpha = float(alpha)
            if alpha < 0:
                raise ConfigError("alpha must not be negative (got %r)" %
                                  alpha)
            if alpha == 0:
                jobs.append((_alpha_job, (
                    dataset, config, model_config, seed, alpha,
                    regularizers)))
            else:
                for reg in regularizers:
                    jobs.append((_alpha_job, (
                        dataset, config, model_config, seed, alpha, (reg,))))
    rows = []
    for r in run_jobs(jobs):
        rows += r
    return RunReport('alpha', rows)


def _formulation_job(dataset, config, model_config, seed):
    result = train_run(dataset, config, model_config, seed, 0.0,
                       config.regularizer)
    rows = []
    for f in FORMULATIONS:
        for row in evaluate_rows(result.model, dataset, [f], seed=seed):
            row['formulation'] = row.pop('method')
            rows.append(row)
    return rows


def sweep_formulations(dataset, config, model_config, repetitions=1):
    """Train without reason supervision and score the reasons with each
    formulation."""
    jobs = [(_formulation_job, (dataset, config, model_config, seed))
            for seed in seeds_from(config, repetitions)]
    rows = []
    for r in run_jobs(jobs):
        rows += r
    return RunReport('formulation', rows)


def _compare_job(dataset, config, model_config, seed, methods):
    rows = []
    if 'noreg' in methods or 'ifiv' in methods:
        noreg = train_run(dataset, config, model_config, seed, 0.0,
                          config.regularizer).model
        for name, method in (('noreg', 'ours'), ('ifiv', 'ifiv')):
            if name in methods:
                for row in evaluate_rows(noreg, dataset, [method],
                                         seed=seed):
                    row['method'] = name
                    rows.append(row)
    if 'multitask' in methods:
        logger.info("Training seed %d multitask", seed)
        model = baseline_multitask(
            dataset.train, config.copy(seed=seed), model_config,
            val_records=dataset.val).model
        rows += evaluate_rows(model, dataset, ['multitask'], seed=seed)
    for reg in ('linear', 'square', 'ce'):
        if reg in methods:
            model = train_run(dataset, config, model_config, seed,
                              config.alpha, reg).model
            for row in evaluate_rows(model, dataset, ['ours'], seed=seed):
                row['method'] = reg
                rows.append(row)
    order = dict((m, i) for i, m in enumerate(methods))
    rows.sort(key=lambda row: order[row['method']])
    return rows


def compare_methods(dataset, config, model_config,
                    methods=('multitask', 'ifiv', 'noreg', 'linear',
                             'square', 'ce'),
                    repetitions=1):
    """The method comparison: every method trained with each seed and
    evaluated on the test sets."""
    known = ('multitask', 'ifiv', 'noreg', 'linear', 'square', 'ce')
    for m in methods:
        if m not in known:
            raise ConfigError("Unknown method %r (expected one of %s)" % (
                m, ", ".join(known)))
    jobs = [(_compare_job, (dataset, config, model_config, seed,
                            tuple(methods)))
            for seed in seeds_from(config, repetitions)]
    rows = []
    for r in run_jobs(jobs):
        rows += r
    return RunReport('method', rows)


def best_alpha(report, regularizer, split='test'):
    """The alpha with the best mean reason accuracy for `regularizer`
    (the smallest one among equals), or `None`."""
    best = None
    for key, stats in sorted(report.summarize(
            ('regularizer', 'alpha'), split=split).items()):
        reg, alpha = key
        if reg != regularizer or stats['reason_acc_mean'] is None:
            continue
        if best is None or stats['reason_acc_mean'] > best[1]:
            best = (alpha, stats['reason_acc_mean'])
    return None if best is None else best[0]
