# -*- coding: UTF-8 -*-
# Copyright 2026 compat-reason contributors
# License: BSD (see file COPYING for details)

"""Finite-difference oracles for :func:`grad
<compat_reason.lib.autodiff.backward.grad>`.

Every check builds a random function on a fresh graph, compares the
automatic gradient with central differences and returns a
:class:`GradCheck`.  Points where a relu input or a max gap is closer to
a kink than the configured margin are redrawn.

"""

import logging

import numpy as np

from .backward import grad
from .graph import DiffGraph
from . import ops

logger = logging.getLogger(__name__)

MAX_REDRAWS = 20


class GradCheck(object):
    """The outcome of one finite-difference comparison."""

    def __init__(self, name, seed, error, tolerance):
        self.name = name
        self.seed = seed
        self.error = error
        self.tolerance = tolerance

    @property
    def ok(self):
        return self.error <= self.tolerance

    def __str__(self):
        return "%s seed=%d rel_err=%.3g (%s %.0e)" % (
            self.name, self.seed, self.error,
            "<=" if self.ok else ">", self.tolerance)


def relative_error(a, b):
    a = np.ravel(np.asarray(a, dtype=np.float64))
    b = np.ravel(np.asarray(b, dtype=np.float64))
    scale = max(np.linalg.norm(a), np.linalg.norm(b))
    if scale == 0.0:
        return 0.0
    return float(np.linalg.norm(a - b) / scale)


def flatten(arrays):
    return np.concatenate([np.ravel(a) for a in arrays])


def unflatten(vector, like):
    out = []
    offset = 0
    for a in like:
        out.append(np.reshape(vector[offset:offset + a.size], a.shape))
        offset += a.size
    return out


def numeric_gradient(func, params, step):
    """Central differences of the scalar function `func(params)` where
    `params` is a list of arrays."""
    theta = flatten(params)
    result = np.zeros_like(theta)
    for k in range(theta.size):
        up = theta.copy()
        up[k] += step
        down = theta.copy()
        down[k] -= step
        result[k] = (func(unflatten(up, params))
                     - func(unflatten(down, params))) / (2 * step)
    return unflatten(result, params)


def random_mlp(rng, max_depth=6, max_dim=16):
    """Return the parameters and input of a random relu network with at
    most `max_depth` layers of at most `max_dim` units."""
    depth = int(rng.integers(1, max_depth + 1))
    dims = [int(d) for d in rng.integers(1, max_dim + 1, size=depth + 1)]
    params = []
    for k in range(depth):
        params.append(rng.normal(size=(dims[k + 1], dims[k]))
                      / np.sqrt(dims[k]))
        params.append(rng.normal(size=dims[k + 1]) * 0.5)
    x = rng.normal(size=dims[0])
    return params, x


def mlp_function(graph, params, x):
    """A scalar function of a relu network mixing all the smooth
    primitives: products, exp, log and a softmax cross entropy."""
    h = graph.constant(x)
    for k in range(0, len(params), 2):
        h = ops.add(ops.matrix_vector_product(params[k], h), params[k + 1])
        if k + 2 < len(params):
            h = ops.relu(h)
    n = h.shape[0]
    quad = ops.mean(ops.square(h))
    soft = ops.log(ops.sum(ops.exp(ops.scale(h, 0.5))))
    out = ops.add(quad, soft)
    if n > 1:
        out = ops.add(out, ops.softmax_cross_entropy(h, n - 1))
    return out


def _draw(rng, max_depth, max_dim, margin):
    for i in range(MAX_REDRAWS):
        params, x = random_mlp(rng, max_depth, max_dim)
        g = DiffGraph()
        f = mlp_function(g, [g.variable(p) for p in params], x)
        if g.kink_margin() > margin:
            return params, x
    logger.warning("No kink-free point after %d draws", MAX_REDRAWS)
    return params, x


def _value(params, x):
    g = DiffGraph()
    return mlp_function(g, [g.variable(p) for p in params], x).item()


def check_first_order(seed, step=1e-6, tolerance=1e-5, margin=1e-3,
                      max_depth=6, max_dim=16):
    """Compare the gradient of a random network with central
    differences."""
    rng = np.random.default_rng(seed)
    params, x = _draw(rng, max_depth, max_dim, margin)
    g = DiffGraph()
    handles = [g.variable(p) for p in params]
    analytic = [h.value for h in grad(mlp_function(g, handles, x), handles)]
    numeric = numeric_gradient(lambda ps: _value(ps, x), params, step)
    err = relative_error(flatten(analytic), flatten(numeric))
    return GradCheck("first-order", seed, err, tolerance)


def _first_gradient(params, x):
    g = DiffGraph()
    handles = [g.variable(p) for p in params]
    return flatten([h.value for h in grad(
        mlp_function(g, handles, x), handles)])


def check_second_order(seed, step=1e-6, tolerance=1e-4, margin=1e-3,
                       max_depth=6, max_dim=16):
    """Compare a Hessian-vector product obtained by differentiating the
    gradient (double backprop) with central differences of the first
    order gradient along the same direction."""
    rng = np.random.default_rng(seed)
    params, x = _draw(rng, max_depth, max_dim, margin)
    direction = [rng.normal(size=p.shape) for p in params]
    g = DiffGraph()
    handles = [g.variable(p) for p in params]
    first = grad(mlp_function(g, handles, x), handles, create_graph=True)
    dot = ops.sum(ops.concat([
        ops.reshape(ops.multiply(gk, g.constant(vk)), (vk.size,))
        for gk, vk in zip(first, direction)]))
    analytic = flatten([h.value for h in grad(dot, handles)])
    theta = flatten(params)
    v = flatten(direction)
    up = _first_gradient(unflatten(theta + step * v, params), x)
    down = _first_gradient(unflatten(theta - step * v, params), x)
    numeric = (up - down) / (2 * step)
    err = relative_error(analytic, numeric)
    return GradCheck("second-order", seed, err, tolerance)


def _reason_problem(rng, max_dim):
    """A small compatibility model with three factors and a batch of
    labelled samples."""
    from compat_reason.lib.compatnet.models import ModelConfig, init_model
    dims = [int(d) for d in rng.integers(1, 4, size=5)]
    hidden = int(rng.integers(2, max(3, max_dim // 2) + 1))
    config = ModelConfig(
        color_dim=dims[0], print_dim=dims[1], material_dim=dims[2],
        silhouette_dim=dims[3], detail_dim=dims[4],
        intra_hidden=(hidden, hidden), intra_out=2,
        inter_hidden=(hidden, hidden))
    model = init_model(config, int(rng.integers(0, 2 ** 31)))
    batch = int(rng.integers(1, 4))
    tops = [rng.normal(size=(batch, d)) for d in dims]
    bottoms = [rng.normal(size=(batch, d)) for d in dims]
    judgments = rng.integers(0, 3, size=batch)
    reasons = rng.integers(0, 3, size=batch)
    return model, (tops, bottoms, judgments, reasons)


def check_reason_loss(seed, regularizer='ce', alpha=1.0, step=1e-6,
                      tolerance=1e-4, margin=1e-3, max_dim=16):
    """Compare the parameter gradient of the total loss (judgment loss
    plus the reason regularizer, a function of first derivatives of the
    logits) with central differences.

    """
    from compat_reason.lib.reasoning.loss import batch_loss
    rng = np.random.default_rng(seed)
    for i in range(MAX_REDRAWS):
        model, batch = _reason_problem(rng, max_dim)
        g = DiffGraph()
        batch_loss(g, model, model.param_handles(g), batch, alpha,
                   regularizer)
        if g.kink_margin() > margin:
            break
    else:
        logger.warning("No kink-free model after %d draws", MAX_REDRAWS)

    def value(params):
        g = DiffGraph()
        handles = [g.variable(p) for p in params]
        return batch_loss(g, model, handles, batch, alpha,
                          regularizer).item()

    g = DiffGraph()
    handles = model.param_handles(g)
    loss = batch_loss(g, model, handles, batch, alpha, regularizer)
    analytic = [h.value for h in grad(loss, handles)]
    numeric = numeric_gradient(value, model.params, step)
    err = relative_error(flatten(analytic), flatten(numeric))
    return GradCheck("reason-loss/%s" % regularizer, seed, err, tolerance)
