# -*- coding: UTF-8 -*-
# Copyright 2026 compat-reason contributors
# License: BSD (see file COPYING for details)

"""Collecting run results and writing them as CSV and plot data."""

import csv
import json
import logging
from collections import OrderedDict

from .metrics import mean_std

logger = logging.getLogger(__name__)

GROUP_KEYS = {
    'alpha': ('regularizer', 'alpha'),
    'formulation': ('formulation',),
    'method': ('method',),
}
"""The columns which identify a sweep point, per kind of report."""

LEADING = ('method', 'formulation', 'regularizer', 'alpha', 'seed',
           'split', 'judgment_acc', 'reason_acc')


class RunReport(object):
    """The rows of a sweep, one per training run and test set.

    .. attribute:: kind

        One of ``alpha``, ``formulation`` or ``method``.

    """

    def __init__(self, kind, rows):
        self.kind = kind
        self.rows = list(rows)

    def __len__(self):
        return len(self.rows)

    def group_keys(self):
        return GROUP_KEYS[self.kind]

    def summarize(self, keys=None, split='test'):
        """Return an ordered dict mapping each sweep point to the mean and
        standard deviation of both accuracies over the seeds."""
        if keys is None:
            keys = self.group_keys()
        groups = OrderedDict()
        for row in self.rows:
            if row.get('split') != split:
                continue
            k = tuple(row[name] for name in keys)
            groups.setdefault(k, []).append(row)
        result = OrderedDict()
        for k, rows in groups.items():
            jm, js = mean_std([r['judgment_acc'] for r in rows])
            rm, rs = mean_std([r['reason_acc'] for r in rows])
            result[k] = dict(n=len(rows), judgment_acc_mean=jm,
                             judgment_acc_std=js, reason_acc_mean=rm,
                             reason_acc_std=rs)
        return result

    def fieldnames(self):
        names = set()
        for row in self.rows:
            names.update(row.keys())
        return [n for n in LEADING if n in names] + sorted(
            names - set(LEADING))

    def write_csv(self, filename):
        """Write all rows."""
        with open(filename, 'w') as fd:
            w = csv.DictWriter(fd, fieldnames=self.fieldnames(),
                               lineterminator='\n')
            w.writeheader()
            for row in self.rows:
                w.writerow(row)
        logger.info("Wrote %d rows to %s", len(self.rows), filename)

    def write_summary_csv(self, filename, split='test'):
        """Write one row per sweep point with mean and standard
        deviation."""
        keys = self.group_keys()
        fields = list(keys) + [
            'n', 'judgment_acc_mean', 'judgment_acc_std',
            'reason_acc_mean', 'reason_acc_std']
        with open(filename, 'w') as fd:
            w = csv.DictWriter(fd, fieldnames=fields, lineterminator='\n')
            w.writeheader()
            for k, stats in self.summarize(keys, split).items():
                row = dict(zip(keys, k))
                row.update(stats)
                w.writerow(row)
        logger.info("Wrote summary to %s", filename)

    def plot_data(self, split='test'):
        """Return the curves of this report: one series per
        regularizer (alpha sweeps) or a single series, each a list of
        (x, judgment accuracy, reason accuracy) points."""
        keys = self.group_keys()
        series = OrderedDict()
        for k, stats in self.summarize(keys, split).items():
            if self.kind == 'alpha':
                name, x = k
            else:
                name, x = self.kind, k[0]
            series.setdefault(name, []).append(
                [x, stats['judgment_acc_mean'], stats['reason_acc_mean']])
        return dict(kind=self.kind, split=split, series=[
            dict(name=name, points=points)
            for name, points in series.items()])

    def write_plot_json(self, filename, split='test'):
        with open(filename, 'w') as fd:
            json.dump(self.plot_data(split), fd, indent=2)
            fd.write('\n')
        logger.info("Wrote plot data to %s", filename)


def write_eval_csv(results, filename):
    """Write the accuracies of some :class:`EvalResult
    <compat_reason.lib.evalharness.evaluation.EvalResult>` objects,
    given as a dict mapping a set name to its result."""
    with open(filename, 'w') as fd:
        w = csv.writer(fd, lineterminator='\n')
        w.writerow(['split', 'method', 'judgment_acc', 'reason_acc'])
        for split, res in results.items():
            w.writerow([split, res.method, res.judgment_acc,
                        '' if res.reason_acc is None else res.reason_acc])
    logger.info("Wrote evaluation to %s", filename)
