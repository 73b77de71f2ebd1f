# -*- coding: UTF-8 -*-
# Copyright 2026 compat-reason contributors
# License: BSD (see file COPYING for details)

import csv
import json
import os
import shutil
import tempfile
from unittest import TestCase, mock

import numpy as np
from unipath import Path

from compat_reason.lib.compat.choicelists import JUDGMENTS, REASONS
from compat_reason.lib.compat.exceptions import ConfigError, DatasetError
from compat_reason.lib.compat.settings import Site
from compat_reason.lib.compatnet.checkpoint import checkpoint_bytes
from compat_reason.lib.compatnet.models import init_model
from compat_reason.lib.evalharness.baselines import (
    baseline_ifiv, baseline_noreg, baseline_multitask)
from compat_reason.lib.evalharness.evaluation import (
    evaluate, predict, run_method, METHODS)
from compat_reason.lib.evalharness.metrics import (
    judgment_accuracy, reason_accuracy, confusion_matrix, mean_std,
    ReasonCounter)
from compat_reason.lib.evalharness.reports import RunReport, write_eval_csv
from compat_reason.lib.evalharness.sweeps import (
    n_threads, sweep_alpha, best_alpha, compare_methods, THREADS_VARIABLE)
from compat_reason.lib.synthdata.generator import Dataset

from tests import tiny_config, random_records


class MetricsTests(TestCase):

    def test_judgment_accuracy(self):
        self.assertEqual(judgment_accuracy([0, 1, 2], [0, 1, 1]),
                         100.0 * 2 / 3)
        self.assertRaises(DatasetError, judgment_accuracy, [0], [0, 1])
        self.assertRaises(DatasetError, judgment_accuracy, [], [])

    def test_reason_accuracy_filters(self):
        preds = [('good', 'color'), ('bad', 'print'), ('normal', None),
                 ('good', 'design')]
        gts = [('good', 'color'), ('good', 'print'), ('normal', None),
               ('good', 'print')]
        # only the first and last outfits count
        self.assertEqual(reason_accuracy(preds, gts), 50.0)

    def test_reason_accuracy_undefined(self):
        preds = [('normal', None), ('good', 'color')]
        gts = [('normal', None), ('bad', 'color')]
        self.assertIsNone(reason_accuracy(preds, gts))

    def test_counter(self):
        c = ReasonCounter()
        self.assertIsNone(c.accuracy)
        c.add('good', 'color', 'good', 'color')
        c.add('bad', 'print', 'bad', 'design')
        c.add('normal', None, 'normal', None)
        c.add('good', 'color', 'bad', 'color')
        self.assertEqual(c.considered, 2)
        self.assertEqual(c.accuracy, 50.0)

    def test_confusion(self):
        m = confusion_matrix(['good', 'bad', 'bad'], ['good', 'good', 'bad'])
        self.assertEqual(m.tolist(), [[1, 0, 1], [0, 0, 0], [0, 0, 1]])

    def test_mean_std(self):
        self.assertEqual(mean_std([]), (None, None))
        self.assertEqual(mean_std([None, 4.0]), (4.0, 0.0))
        m, s = mean_std([1.0, 3.0])
        self.assertEqual(m, 2.0)
        self.assertAlmostEqual(s, np.sqrt(2.0))


class EvaluationTests(TestCase):

    def setUp(self):
        self.model = init_model(tiny_config(), seed=0)
        self.records = random_records(12, seed=3)

    def test_predict(self):
        pj, pr = predict(self.model, self.records)
        self.assertEqual(pj.shape, (12,))
        self.assertEqual(pr.shape, (12,))
        for j, r in zip(pj, pr):
            self.assertIn(j, (0, 1, 2))
            if j == 1:
                self.assertEqual(r, -1)
            else:
                self.assertIn(r, (0, 1, 2))

    def test_predict_errors(self):
        self.assertRaises(ConfigError, predict, self.model, self.records,
                          'bogus')
        self.assertRaises(ConfigError, predict, self.model, self.records,
                          'multitask')
        self.assertRaises(DatasetError, predict, self.model, [])

    def test_ours_is_f6(self):
        a = predict(self.model, self.records, 'ours')
        b = predict(self.model, self.records, 'F6')
        self.assertTrue(np.array_equal(a[1], b[1]))

    def test_ifiv_matches_single(self):
        pj, pr = predict(self.model, self.records, 'ifiv')
        for rec, j, r in zip(self.records, pj, pr):
            expected = baseline_ifiv(self.model, rec)
            if j == 1:
                self.assertIsNone(expected)
            else:
                self.assertEqual(expected, ('color', 'print', 'design')[r])

    def test_multitask(self):
        model = init_model(tiny_config(), seed=0, reason_head=True)
        res = evaluate(model, self.records, 'multitask')
        self.assertEqual(res.method, 'multitask')
        self.assertEqual(res.confusion.sum(), 12)

    def test_evaluate(self):
        res = evaluate(self.model, self.records)
        pj = res.pred_judgments
        gt = [r.judgment_idx for r in self.records]
        self.assertEqual(res.judgment_acc,
                         100.0 * sum(pj == np.array(gt)) / 12)
        self.assertEqual(res.confusion.sum(), 12)
        self.assertEqual(np.trace(res.confusion),
                         int(sum(pj == np.array(gt))))

    def test_run_method(self):
        ds = Dataset([], [], self.records)
        self.assertEqual(list(run_method(self.model, ds)), ['test'])
        ds.test_random = random_records(6, seed=4)
        results = run_method(self.model, ds, 'F2')
        self.assertEqual(sorted(results), ['test', 'test_random'])
        self.assertEqual(results['test_random'].method, 'F2')

    def test_all_methods_known(self):
        self.assertEqual(METHODS[:3], ('ours', 'ifiv', 'multitask'))
        self.assertEqual(len(METHODS), 9)


class ReportTests(TestCase):

    def setUp(self):
        self.tmp = Path(tempfile.mkdtemp())
        rows = []
        for seed, (j, r) in enumerate([(80.0, 50.0), (90.0, 70.0)]):
            for alpha in (0.0, 1.0):
                rows.append(dict(regularizer='ce', alpha=alpha, seed=seed,
                                 split='test', judgment_acc=j,
                                 reason_acc=r + 10 * alpha))
        rows.append(dict(regularizer='ce', alpha=1.0, seed=0,
                         split='test_random', judgment_acc=10.0,
                         reason_acc=None))
        self.report = RunReport('alpha', rows)

    def tearDown(self):
        shutil.rmtree(self.tmp)

    def test_summarize(self):
        s = self.report.summarize()
        self.assertEqual(list(s), [('ce', 0.0), ('ce', 1.0)])
        st = s[('ce', 1.0)]
        self.assertEqual(st['n'], 2)
        self.assertEqual(st['judgment_acc_mean'], 85.0)
        self.assertEqual(st['reason_acc_mean'], 70.0)
        r = self.report.summarize(split='test_random')
        self.assertEqual(r[('ce', 1.0)]['reason_acc_mean'], None)

    def test_best_alpha(self):
        self.assertEqual(best_alpha(self.report, 'ce'), 1.0)
        self.assertIsNone(best_alpha(self.report, 'square'))

    def test_csv(self):
        fn = self.tmp.child('runs.csv')
        self.report.write_csv(fn)
        with open(fn) as fd:
            rows = list(csv.DictReader(fd))
        self.assertEqual(len(rows), 5)
        self.assertEqual(list(rows[0])[:4],
                         ['regularizer', 'alpha', 'seed', 'split'])
        fn = self.tmp.child('summary.csv')
        self.report.write_summary_csv(fn)
        with open(fn) as fd:
            rows = list(csv.DictReader(fd))
        self.assertEqual(len(rows), 2)
        self.assertEqual(rows[1]['reason_acc_mean'], '70.0')

    def test_plot(self):
        fn = self.tmp.child('plot.json')
        self.report.write_plot_json(fn)
        with open(fn) as fd:
            d = json.load(fd)
        self.assertEqual(d['kind'], 'alpha')
        self.assertEqual(d['series'][0]['name'], 'ce')
        self.assertEqual(d['series'][0]['points'],
                         [[0.0, 85.0, 60.0], [1.0, 85.0, 70.0]])

    def test_eval_csv(self):
        model = init_model(tiny_config(), seed=0)
        res = evaluate(model, random_records(6))
        fn = self.tmp.child('eval.csv')
        write_eval_csv(dict(test=res), fn)
        with open(fn) as fd:
            lines = fd.read().splitlines()
        self.assertEqual(lines[0], 'split,method,judgment_acc,reason_acc')
        self.assertTrue(lines[1].startswith('test,ours,'))


class SweepTests(TestCase):

    def test_threads(self):
        with mock.patch.dict(os.environ, {THREADS_VARIABLE: '3'}):
            self.assertEqual(n_threads(), 3)
        for v in ('0', 'many', '-2'):
            with mock.patch.dict(os.environ, {THREADS_VARIABLE: v}):
                self.assertRaises(ConfigError, n_threads)
        with mock.patch.dict(os.environ, {}):
            os.environ.pop(THREADS_VARIABLE, None)
            self.assertEqual(n_threads(), 1)

    def test_sweep_alpha(self):
        cfg = Site(training=dict(epochs=1, batch_size=4)).plugins.training
        ds = Dataset(random_records(12, seed=1), random_records(6, seed=2),
                     random_records(6, seed=3))
        with mock.patch.dict(os.environ, {THREADS_VARIABLE: '1'}):
            report = sweep_alpha([0, 0.5], ds, cfg, tiny_config(),
                                 regularizers=('ce', 'linear'))
        self.assertEqual(report.kind, 'alpha')
        self.assertEqual(len(report), 4)
        zero = [r for r in report.rows if r['alpha'] == 0.0]
        self.assertEqual([r['regularizer'] for r in zero], ['ce', 'linear'])
        self.assertEqual(zero[0]['judgment_acc'], zero[1]['judgment_acc'])
        self.assertEqual(zero[0]['reason_acc'], zero[1]['reason_acc'])
        self.assertRaises(ConfigError, sweep_alpha, [-1], ds, cfg,
                          tiny_config())

    def test_alpha_zero_is_noreg(self):
        cfg = Site(training=dict(epochs=1, batch_size=4)).plugins.training
        ds = Dataset(random_records(12, seed=1), random_records(6, seed=2),
                     random_records(6, seed=3))
        with mock.patch.dict(os.environ, {THREADS_VARIABLE: '1'}):
            report = sweep_alpha([0], ds, cfg, tiny_config())
        model = baseline_noreg(ds.train, cfg, tiny_config(),
                               val_records=ds.val).model
        self.assertEqual(report.rows[0]['judgment_acc'],
                         evaluate(model, ds.test).judgment_acc)

    def test_compare_methods(self):
        cfg = Site(training=dict(epochs=1, batch_size=4)).plugins.training
        ds = Dataset(random_records(12, seed=1), random_records(6, seed=2),
                     random_records(6, seed=3))
        with mock.patch.dict(os.environ, {THREADS_VARIABLE: '1'}):
            report = compare_methods(ds, cfg, tiny_config(),
                                     methods=('noreg', 'multitask'),
                                     repetitions=2)
        self.assertEqual(report.kind, 'method')
        self.assertEqual([(r['seed'], r['method']) for r in report.rows],
                         [(0, 'noreg'), (0, 'multitask'),
                          (1, 'noreg'), (1, 'multitask')])
        self.assertRaises(ConfigError, compare_methods, ds, cfg,
                          tiny_config(), methods=('bogus',))


class BaselineTests(TestCase):

    def setUp(self):
        self.cfg = Site(training=dict(
            epochs=1, batch_size=4, alpha=5.0)).plugins.training
        self.records = random_records(12, seed=5)

    def test_noreg_ignores_alpha(self):
        from compat_reason.lib.training.loop import train
        a = baseline_noreg(self.records, self.cfg, tiny_config()).model
        b = train(self.records, self.cfg.copy(alpha=0.0),
                  tiny_config()).model
        self.assertEqual(checkpoint_bytes(a), checkpoint_bytes(b))
        self.assertEqual(self.cfg.alpha, 5.0)

    def test_multitask(self):
        result = baseline_multitask(self.records, self.cfg, tiny_config())
        self.assertTrue(result.model.config.reason_head)
        self.assertEqual(len(result.log), 1)
        res = evaluate(result.model, self.records, 'multitask')
        self.assertEqual(res.confusion.sum(), 12)


class ReasonCounterTests(TestCase):

    def test_agrees_with_reason_accuracy(self):
        rng = np.random.default_rng(11)

        def pairs(n):
            result = []
            for j in rng.integers(0, 3, size=n):
                j = JUDGMENTS[j]
                r = None if j == 'normal' else REASONS[rng.integers(0, 3)]
                result.append((j, r))
            return result

        for n in (1, 5, 50, 500):
            preds = pairs(n)
            gts = pairs(n)
            c = ReasonCounter()
            for p, g in zip(preds, gts):
                c.add(p[0], p[1], g[0], g[1])
            self.assertEqual(c.accuracy, reason_accuracy(preds, gts))
