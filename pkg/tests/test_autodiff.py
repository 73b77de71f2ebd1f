# -*- coding: UTF-8 -*-
# Copyright 2026 compat-reason contributors
# License: BSD (see file COPYING for details)

import os
from unittest import TestCase, skipUnless

import numpy as np

from compat_reason.lib.autodiff import ops
from compat_reason.lib.autodiff.backward import grad, grad_values
from compat_reason.lib.autodiff.graph import DiffGraph
from compat_reason.lib.autodiff.gradcheck import (
    check_first_order, check_second_order, check_reason_loss,
    relative_error)
from compat_reason.lib.compat.exceptions import (
    CrossGraphError, GraphError, NonFiniteError, ShapeError)


class GraphTests(TestCase):

    def test_values_are_read_only(self):
        g = DiffGraph()
        v = np.array([1.0, 2.0])
        x = g.variable(v)
        v[0] = 5.0
        self.assertEqual(x.value[0], 1.0)
        self.assertFalse(x.value.flags.writeable)

    def test_non_finite(self):
        g = DiffGraph()
        x = g.variable([0.0, 1.0])
        self.assertRaises(NonFiniteError, ops.log, x)
        g = DiffGraph(check_finite=False)
        y = ops.log(g.variable([0.0, 1.0]))
        self.assertEqual(y.value[0], -np.inf)

    def test_cross_graph(self):
        a = DiffGraph().variable([1.0])
        b = DiffGraph().variable([1.0])
        self.assertRaises(CrossGraphError, ops.add, a, b)

    def test_shapes(self):
        g = DiffGraph()
        a = g.variable([1.0, 2.0])
        b = g.variable([1.0, 2.0, 3.0])
        self.assertRaises(ShapeError, ops.add, a, b)
        self.assertRaises(ShapeError, ops.slice, a, 1, 3)
        m = g.variable(np.ones((2, 3)))
        self.assertEqual(ops.add(m, b).shape, (2, 3))
        self.assertRaises(ShapeError, ops.matrix_vector_product, m, a)

    def test_kink_margin(self):
        g = DiffGraph()
        x = g.variable([0.5, -0.01, 0.0, 2.0])
        ops.relu(x)
        self.assertEqual(g.kink_margin(), 0.01)
        ops.max(g.variable([1.0, 1.25, 3.0]))
        self.assertEqual(g.kink_margin(), 0.01)
        ops.max(g.variable([1.0, 1.001]))
        self.assertAlmostEqual(g.kink_margin(), 0.001)


class GradTests(TestCase):

    def test_square(self):
        g = DiffGraph()
        x = g.variable([1.0, -2.0, 3.0])
        (dx,) = grad_values(ops.sum(ops.square(x)), [x])
        self.assertTrue(np.array_equal(dx, [2.0, -4.0, 6.0]))

    def test_operators(self):
        g = DiffGraph()
        a = g.variable([1.0, 2.0])
        b = g.variable([3.0, 5.0])
        f = ops.sum((a * b - a) / b)
        da, db = grad_values(f, [a, b])
        self.assertTrue(np.allclose(da, (b.value - 1) / b.value))
        self.assertTrue(np.allclose(db, a.value / b.value ** 2))

    def test_matrix_product(self):
        rng = np.random.default_rng(1)
        g = DiffGraph()
        a = g.variable(rng.normal(size=(3, 4)))
        b = g.variable(rng.normal(size=(4, 2)))
        da, db = grad_values(ops.sum(a @ b), [a, b])
        self.assertTrue(np.allclose(
            da, np.ones((3, 2)).dot(b.value.T)))
        self.assertTrue(np.allclose(
            db, a.value.T.dot(np.ones((3, 2)))))

    def test_double_backprop(self):
        g = DiffGraph()
        x = g.variable([1.0, 2.0, -1.5])
        f = ops.sum(ops.multiply(x, ops.square(x)))
        (d1,) = grad(f, [x], create_graph=True)
        self.assertTrue(np.allclose(d1.value, 3 * x.value ** 2))
        (d2,) = grad_values(ops.sum(d1), [x])
        self.assertTrue(np.allclose(d2, 6 * x.value))

    def test_relu_second_derivative_is_zero(self):
        g = DiffGraph()
        x = g.variable([1.0, -1.0, 2.0])
        (d1,) = grad(ops.sum(ops.relu(x)), [x], create_graph=True)
        self.assertTrue(np.array_equal(d1.value, [1.0, 0.0, 1.0]))
        (d2,) = grad_values(ops.sum(ops.square(d1)), [x])
        self.assertTrue(np.array_equal(d2, np.zeros(3)))

    def test_max_gradient(self):
        g = DiffGraph()
        x = g.variable([1.0, 3.0, 3.0])
        (dx,) = grad_values(ops.max(x), [x])
        self.assertTrue(np.array_equal(dx, [0.0, 1.0, 0.0]))

    def test_softmax_cross_entropy(self):
        logits = np.array([0.5, -1.0, 2.0])
        g = DiffGraph()
        x = g.variable(logits)
        loss = ops.softmax_cross_entropy(x, 1)
        p = np.exp(logits) / np.sum(np.exp(logits))
        self.assertAlmostEqual(loss.item(), -np.log(p[1]))
        (dx,) = grad_values(loss, [x])
        self.assertTrue(np.allclose(dx, p - np.eye(3)[1]))

    def test_batched_cross_entropy(self):
        logits = np.array([[0.5, -1.0, 2.0], [1.0, 1.0, 0.0]])
        g = DiffGraph()
        x = g.variable(logits)
        loss = ops.softmax_cross_entropy(x, np.array([2, 0]))
        self.assertEqual(loss.shape, (2,))
        for row, t, v in zip(logits, (2, 0), loss.value):
            h = DiffGraph()
            self.assertAlmostEqual(
                v, ops.softmax_cross_entropy(h.variable(row), t).item())

    def test_unrelated_variable(self):
        g = DiffGraph()
        x = g.variable([1.0])
        z = g.variable([4.0, 5.0])
        dx, dz = grad_values(ops.sum(ops.square(x)), [x, z])
        self.assertTrue(np.array_equal(dz, np.zeros(2)))

    def test_misuse(self):
        g = DiffGraph()
        x = g.variable([1.0, 2.0])
        c = g.constant([1.0, 2.0])
        self.assertRaises(ShapeError, grad, ops.square(x), [x])
        self.assertRaises(GraphError, grad, ops.sum(x), [c])
        self.assertRaises(GraphError, grad, ops.sum(x),
                          [DiffGraph().variable([1.0])])

    def test_reproducible(self):
        def run():
            rng = np.random.default_rng(7)
            g = DiffGraph()
            w = g.variable(rng.normal(size=(5, 5)))
            v = g.constant(rng.normal(size=5))
            h = ops.relu(ops.matrix_vector_product(w, v))
            f = ops.sum(ops.exp(ops.matrix_vector_product(w, h)))
            return grad_values(f, [w])[0]
        self.assertEqual(run().tobytes(), run().tobytes())

    def test_linearity(self):
        def gradient(w, v, a, b):
            g = DiffGraph()
            x = g.variable(v)
            f = ops.sum(ops.exp(ops.matrix_vector_product(
                g.constant(w), x)))
            h = ops.sum(ops.square(ops.relu(x)))
            out = ops.add(ops.scale(f, a), ops.scale(h, b))
            return grad_values(out, [x])[0]

        rng = np.random.default_rng(4)
        for i in range(10):
            w = rng.normal(size=(4, 4))
            v = rng.normal(size=4)
            a, b = rng.normal(size=2)
            self.assertTrue(np.allclose(
                gradient(w, v, a, b),
                a * gradient(w, v, 1.0, 0.0) + b * gradient(w, v, 0.0, 1.0),
                rtol=1e-10, atol=1e-12))


class FiniteDifferenceTests(TestCase):

    def test_relative_error(self):
        self.assertEqual(relative_error([0.0], [0.0]), 0.0)
        self.assertAlmostEqual(relative_error([1.0, 0.0], [0.0, 0.0]), 1.0)

    def test_first_order(self):
        for seed in range(30):
            c = check_first_order(seed)
            self.assertTrue(c.ok, str(c))

    def test_second_order(self):
        for seed in range(30):
            c = check_second_order(seed)
            self.assertTrue(c.ok, str(c))

    def test_reason_loss(self):
        for reg in ('ce', 'linear', 'square'):
            for seed in range(2):
                c = check_reason_loss(seed, reg)
                self.assertTrue(c.ok, str(c))

    @skipUnless(os.environ.get('COMPAT_REASON_SLOW') == '1',
                "set COMPAT_REASON_SLOW=1 to run")
    def test_reason_loss_many_seeds(self):
        for reg in ('ce', 'linear', 'square'):
            for seed in range(100):
                c = check_reason_loss(seed, reg)
                self.assertTrue(c.ok, str(c))
