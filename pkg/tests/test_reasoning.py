# -*- coding: UTF-8 -*-
# Copyright 2026 compat-reason contributors
# License: BSD (see file COPYING for details)

from unittest import TestCase, mock

import numpy as np

from compat_reason.lib.autodiff import ops
from compat_reason.lib.autodiff.graph import DiffGraph
from compat_reason.lib.colorfeat.records import stack_records
from compat_reason.lib.compat.exceptions import (
    ConfigError, DatasetError, ShapeError)
from compat_reason.lib.compatnet.models import init_model, forward_batch
from compat_reason.lib.reasoning.contributions import (
    contrib, positive_contrib, contribution_difference, formulation_score,
    f_vector, reason_good, reason_bad, predict_reason, predict_reasons,
    default_ranges, FORMULATIONS)
from compat_reason.lib.reasoning.loss import (
    batch_loss, total_loss, judgment_loss)
from compat_reason.lib.reasoning.regularizers import (
    reg_ce, reg_linear, reg_square, get_regularizer, regularizer_values)

from tests import tiny_config, random_records

RANGES = ((0, 2), (2, 4), (4, 6))


class TinyNet(object):
    """y = W2 relu(W1 x + b1) on an x of 6 elements."""

    def __init__(self, seed):
        rng = np.random.default_rng(seed)
        self.w1 = rng.normal(size=(5, 6))
        self.b1 = rng.normal(size=5)
        self.w2 = rng.normal(size=(3, 5))
        self.x = rng.normal(size=6)

    def build(self, graph, x=None):
        x = graph.variable(self.x if x is None else x)
        if x.ndim == 1:
            h = ops.add(ops.matrix_vector_product(
                graph.constant(self.w1), x), graph.constant(self.b1))
            y = ops.matrix_vector_product(graph.constant(self.w2),
                                          ops.relu(h))
        else:
            h = ops.add(ops.matrix_product(x, graph.constant(self.w1.T)),
                        graph.constant(self.b1))
            y = ops.matrix_product(ops.relu(h), graph.constant(self.w2.T))
        return x, y

    def logit_gradient(self, j, x=None):
        x = self.x if x is None else x
        mask = (np.dot(self.w1, x) + self.b1 > 0).astype(float)
        return np.dot(self.w1.T, mask * self.w2[j])

    def positive_contrib(self, j, x=None):
        x = self.x if x is None else x
        v = np.maximum(self.logit_gradient(j, x), 0) * np.maximum(x, 0)
        return np.array([np.mean(v[a:b]) for a, b in RANGES])


class ContributionTests(TestCase):

    def test_brute_force(self):
        for seed in range(20):
            net = TinyNet(seed)
            g = DiffGraph()
            x, y = net.build(g)
            for j in range(3):
                expected = net.logit_gradient(j) * np.maximum(net.x, 0)
                self.assertTrue(np.allclose(
                    contrib(x, y, j).value, expected, rtol=0, atol=1e-10))
                self.assertTrue(np.allclose(
                    positive_contrib(x, y, j, RANGES).value,
                    net.positive_contrib(j), rtol=0, atol=1e-10))
            for gt in (0, 2):
                self.assertTrue(np.allclose(
                    f_vector(x, y, gt, RANGES).value,
                    net.positive_contrib(gt) - net.positive_contrib(1),
                    rtol=0, atol=1e-10))

    def test_batch_rows(self):
        net = TinyNet(3)
        rows = np.random.default_rng(9).normal(size=(4, 6))
        g = DiffGraph()
        x, y = net.build(g, rows)
        cp = positive_contrib(x, y, 2, RANGES).value
        self.assertEqual(cp.shape, (4, 3))
        for i, row in enumerate(rows):
            self.assertTrue(np.allclose(
                cp[i], net.positive_contrib(2, row), rtol=0, atol=1e-10))

    def test_normal_is_exactly_zero(self):
        for seed in range(1000):
            net = TinyNet(seed)
            g = DiffGraph()
            x, y = net.build(g)
            self.assertTrue(np.all(
                f_vector(x, y, 'normal', RANGES).value == 0))

    def test_normal_rows_of_a_batch(self):
        for seed in range(50):
            net = TinyNet(seed)
            rows = np.random.default_rng(seed).normal(size=(5, 6))
            g = DiffGraph()
            x, y = net.build(g, rows)
            gt = np.array([0, 1, 2, 1, 0])
            F = f_vector(x, y, gt, RANGES).value
            self.assertTrue(np.all(F[[1, 3]] == 0))
            self.assertTrue(np.allclose(
                F[2], net.positive_contrib(2, rows[2])
                - net.positive_contrib(1, rows[2]), rtol=0, atol=1e-10))
        self.assertRaises(ShapeError, f_vector, x, y, [0, 1], RANGES)

    def test_formulations(self):
        net = TinyNet(11)
        g = DiffGraph()
        x, y = net.build(g)
        c = net.logit_gradient(0) * np.maximum(net.x, 0)
        f1 = formulation_score(x, y, 0, 'F1', RANGES).value
        self.assertTrue(np.allclose(
            f1, [np.mean(c[a:b]) for a, b in RANGES], atol=1e-12))
        self.assertTrue(np.all(
            formulation_score(x, y, 0, 'F4', RANGES).value >= 0))
        self.assertTrue(np.all(
            formulation_score(x, y, 0, 'F5', RANGES).value >= 0))
        self.assertTrue(np.array_equal(
            formulation_score(x, y, 2, 'F6', RANGES).value,
            contribution_difference(x, y, 2, RANGES).value))
        for f in FORMULATIONS:
            self.assertEqual(
                formulation_score(x, y, 0, f, RANGES).shape, (3,))
        self.assertRaises(ConfigError, formulation_score, x, y, 0, 'F7',
                          RANGES)

    def test_reason_names(self):
        net = TinyNet(4)
        g = DiffGraph()
        x, y = net.build(g)
        good = net.positive_contrib(0) - net.positive_contrib(1)
        bad = net.positive_contrib(2) - net.positive_contrib(1)
        names = ('color', 'print', 'design')
        self.assertEqual(reason_good(x, y, RANGES),
                         names[int(np.argmax(good))])
        self.assertEqual(reason_bad(x, y, RANGES),
                         names[int(np.argmax(bad))])

    def test_predict_reasons(self):
        model = init_model(tiny_config(), 3)
        fp = forward_batch(model, random_records(12))
        r = predict_reasons(fp.x, fp.y, 'F6',
                            model.config.reason_ranges())
        j = np.argmax(fp.y.value, axis=-1)
        self.assertTrue(np.all((r == -1) == (j == 1)))
        self.assertTrue(np.all(r < 3))

    def test_good_outfit_explained_by_color(self):
        # y = W x with x all ones: the positive contributions are the
        # mean weights of each range, and the normal logit is constant
        w = np.array([[0.647, 0.647, 0.098, 0.098, 0.045, 0.045],
                      [0.0] * 6,
                      [-0.1] * 6])
        g = DiffGraph()
        x = g.variable(np.ones(6))
        y = ops.matrix_vector_product(g.constant(w), x)
        self.assertEqual(int(np.argmax(y.value)), 0)
        self.assertTrue(np.allclose(
            positive_contrib(x, y, 0, RANGES).value, [0.647, 0.098, 0.045]))
        self.assertTrue(np.all(positive_contrib(x, y, 1, RANGES).value == 0))
        self.assertTrue(np.allclose(
            f_vector(x, y, 'good', RANGES).value, [0.647, 0.098, 0.045]))
        model = mock.Mock(**{'config.reason_ranges.return_value': RANGES})
        self.assertEqual(predict_reason(model, x, y), 'color')

    def test_scaling_a_judgment_row(self):
        for seed in range(20):
            net = TinyNet(seed)
            for j in range(3):
                g = DiffGraph()
                x, y = net.build(g)
                before = positive_contrib(x, y, j, RANGES).value
                for c in (0.01, 3.0, 100.0):
                    scaled = TinyNet(seed)
                    scaled.w2[j] *= c
                    g = DiffGraph()
                    x, y = scaled.build(g)
                    after = positive_contrib(x, y, j, RANGES).value
                    self.assertTrue(np.allclose(after, c * before))
                    self.assertEqual(np.argmax(after), np.argmax(before))

    def test_default_ranges(self):
        self.assertEqual(default_ranges(10), ((0, 2), (2, 4), (4, 10)))
        self.assertRaises(ShapeError, default_ranges, 6)


class RegularizerTests(TestCase):

    def value(self, func, F, gt):
        g = DiffGraph()
        return func(g.variable(F), gt).item()

    def test_linear_and_square(self):
        F = [0.2, 0.5, -0.1]
        self.assertEqual(self.value(reg_linear, F, 1), 0.0)
        self.assertAlmostEqual(self.value(reg_linear, F, 0), 0.3)
        self.assertAlmostEqual(self.value(reg_square, F, 2), 0.36)
        self.assertEqual(self.value(reg_square, F, 'print'), 0.0)

    def test_ce(self):
        F = np.array([0.2, 0.5, -0.1])
        p = np.exp(F) / np.sum(np.exp(F))
        self.assertAlmostEqual(self.value(reg_ce, F, 2), -np.log(p[2]))

    def test_color_labelled(self):
        F = [0.5, 0.9, 0.1]
        self.assertAlmostEqual(self.value(reg_linear, F, 'color'), 0.4)
        self.assertAlmostEqual(self.value(reg_square, F, 'color'), 0.16)
        self.assertAlmostEqual(self.value(reg_ce, [0.0] * 3, 'color'),
                               np.log(3.0))

    def test_rows(self):
        F = np.array([[0.0, 1.0, 0.0], [2.0, 0.0, 1.0]])
        g = DiffGraph()
        v = regularizer_values(g.variable(F), np.array([1, 2]), 'linear')
        self.assertTrue(np.allclose(v, [0.0, 1.0]))

    def test_lookup(self):
        self.assertIs(get_regularizer('cross_entropy'), reg_ce)
        self.assertIs(get_regularizer('square'), reg_square)
        self.assertRaises(ConfigError, get_regularizer, 'hinge')


class LossTests(TestCase):

    def setUp(self):
        self.model = init_model(tiny_config(), 0)
        self.records = random_records(9, seed=1)
        self.batch = stack_records(self.records)

    def loss(self, alpha, reg='ce', batch=None):
        g = DiffGraph()
        return batch_loss(g, self.model, self.model.param_handles(g),
                          batch or self.batch, alpha, reg).item()

    def test_alpha_zero(self):
        fp = forward_batch(self.model, self.batch)
        ce = judgment_loss(fp.y, self.batch[2]).value
        self.assertAlmostEqual(self.loss(0.0), float(np.mean(ce)))

    def test_alpha_adds_regularizer(self):
        base = self.loss(0.0)
        for reg in ('ce', 'linear', 'square'):
            self.assertGreaterEqual(self.loss(1.0, reg), base)
        self.assertGreater(self.loss(1.0, 'ce'), base)

    def test_normal_batch(self):
        normal = stack_records([r for r in self.records
                                if r.judgment == 'normal'])
        self.assertEqual(self.loss(5.0, 'ce', normal),
                         self.loss(0.0, 'ce', normal))

    def test_errors(self):
        self.assertRaises(ConfigError, self.loss, -1.0)
        self.assertRaises(DatasetError, total_loss, [], self.model, 1.0,
                          'ce')

    def test_total_loss(self):
        loss, params = total_loss(self.records, self.model, 1.0, 'square')
        self.assertEqual(len(params), len(self.model.params))
        self.assertAlmostEqual(loss.item(), self.loss(1.0, 'square'))
