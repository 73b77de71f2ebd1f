# -*- coding: UTF-8 -*-
# Copyright 2026 compat-reason contributors
# License: BSD (see file COPYING for details)

"""The network parameters and the forward pass.

A weight matrix has shape (fan_in, fan_out) and a layer computes
``h @ W + b``.  The parameters of a model are kept as one flat list of
numpy arrays in declared layer order: the five intra-factor networks in
factor order, the inter-factor network, then the optional reason head.

"""

import logging

import numpy as np

from compat_reason.lib.autodiff import ops
from compat_reason.lib.autodiff.graph import DiffGraph
from compat_reason.lib.compat.choicelists import (
    FACTORS, JUDGMENTS, REASONS, REASON_FACTORS, GOOD, BAD)
from compat_reason.lib.compat.exceptions import ConfigError, DatasetError
from compat_reason.lib.colorfeat.foco import COLOR_DIM
from compat_reason.lib.colorfeat.records import (
    OutfitRecord, stack_records)

logger = logging.getLogger(__name__)


def _ints(value):
    return tuple(int(v) for v in value)


class ModelConfig(object):
    """The dimensions of a :class:`CompatModel`."""

    FIELDS = ('color_dim', 'print_dim', 'material_dim', 'silhouette_dim',
              'detail_dim', 'intra_hidden', 'intra_out', 'inter_hidden',
              'reason_head', 'reason_hidden')

    def __init__(self, color_dim=COLOR_DIM, print_dim=14, material_dim=10,
                 silhouette_dim=5, detail_dim=8, intra_hidden=(64, 64),
                 intra_out=32, inter_hidden=(64, 32), reason_head=False,
                 reason_hidden=(64, 32)):
        self.color_dim = int(color_dim)
        self.print_dim = int(print_dim)
        self.material_dim = int(material_dim)
        self.silhouette_dim = int(silhouette_dim)
        self.detail_dim = int(detail_dim)
        self.intra_hidden = _ints(intra_hidden)
        self.intra_out = int(intra_out)
        self.inter_hidden = _ints(inter_hidden)
        self.reason_head = bool(reason_head)
        self.reason_hidden = _ints(reason_hidden)
        sizes = [self.intra_out] + list(self.intra_hidden) + list(
            self.inter_hidden) + list(self.reason_hidden) + [
                self.feature_dims()[f] for f in FACTORS]
        if min(sizes) <= 0:
            raise ConfigError("Invalid model dimensions %s" % self.to_dict())
        if len(self.intra_hidden) != 2 or len(self.inter_hidden) != 2:
            raise ConfigError("A network has exactly two hidden layers")

    @classmethod
    def from_site(cls, site, **kw):
        dims = site.plugins.colorfeat.get_dims()
        net = site.plugins.compatnet
        kw.setdefault('intra_hidden', net.intra_hidden)
        kw.setdefault('intra_out', net.intra_out)
        kw.setdefault('inter_hidden', net.inter_hidden)
        kw.setdefault('reason_hidden', net.reason_hidden)
        return cls(color_dim=dims['color'], print_dim=dims['print'],
                   material_dim=dims['material'],
                   silhouette_dim=dims['silhouette'],
                   detail_dim=dims['detail'], **kw)

    def to_dict(self):
        return dict((k, getattr(self, k)) for k in self.FIELDS)

    def replace(self, **kw):
        d = self.to_dict()
        d.update(kw)
        return ModelConfig(**d)

    def __eq__(self, other):
        return isinstance(other, ModelConfig) and \
            self.to_dict() == other.to_dict()

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return "ModelConfig(%s)" % ", ".join(
            "%s=%r" % (k, getattr(self, k)) for k in self.FIELDS)

    def feature_dims(self):
        return dict(color=self.color_dim, print=self.print_dim,
                    material=self.material_dim,
                    silhouette=self.silhouette_dim, detail=self.detail_dim)

    @property
    def x_dim(self):
        return len(FACTORS) * self.intra_out

    def factor_segments(self):
        """Map each factor to its (start, stop) range in `x`."""
        n = self.intra_out
        return dict((f, (i * n, (i + 1) * n)) for i, f in enumerate(FACTORS))

    def partition(self):
        """Map each reason to its index set in `x`, as a sorted int
        array.  The sets are disjoint and cover `x`."""
        seg = self.factor_segments()
        return dict(
            (r, np.concatenate([np.arange(*seg[f]) for f in REASON_FACTORS[r]]))
            for r in REASONS)

    def reason_ranges(self):
        """Map each reason to its (start, stop) range in `x`.  The
        factors of a reason are adjacent, so every index set is a
        range."""
        result = dict()
        for r, idx in self.partition().items():
            start, stop = int(idx[0]), int(idx[-1]) + 1
            assert stop - start == len(idx)
            result[r] = (start, stop)
        return result

    def layer_sizes(self):
        """Yield (name, sizes) for each network in parameter order."""
        dims = self.feature_dims()
        for f in FACTORS:
            yield f, [2 * dims[f]] + list(self.intra_hidden) + [
                self.intra_out]
        yield 'inter', [self.x_dim] + list(self.inter_hidden) + [
            len(JUDGMENTS)]
        if self.reason_head:
            yield 'reason', [self.x_dim] + list(self.reason_hidden) + [
                len(REASONS)]

    def param_shapes(self):
        shapes = []
        for name, sizes in self.layer_sizes():
            for fan_in, fan_out in zip(sizes[:-1], sizes[1:]):
                shapes.append((fan_in, fan_out))
                shapes.append((fan_out,))
        return shapes

    def n_params(self):
        return sum(int(np.prod(s)) for s in self.param_shapes())


class Mlp(object):
    """A view on the parameters of one network: the slice of the flat
    parameter list holding its (W, b) pairs."""

    def __init__(self, name, start, n_layers):
        self.name = name
        self.start = start
        self.n_layers = n_layers

    @property
    def stop(self):
        return self.start + 2 * self.n_layers

    def apply(self, params, h):
        """Apply the network to `h` (a vector or a matrix of row
        vectors).  `params` is the full list of parameter handles."""
        vector = h.ndim == 1
        if vector:
            h = ops.reshape(h, (1, h.shape[0]))
        for k in range(self.n_layers):
            w = params[self.start + 2 * k]
            b = params[self.start + 2 * k + 1]
            h = ops.add(ops.matrix_product(h, w), b)
            if k < self.n_layers - 1:
                h = ops.relu(h)
        if vector:
            h = ops.reshape(h, (h.shape[1],))
        return h

    def apply_numpy(self, params, h):
        """Plain numpy version of :meth:`apply`."""
        h = np.asarray(h, dtype=np.float64)
        for k in range(self.n_layers):
            w = params[self.start + 2 * k]
            b = params[self.start + 2 * k + 1]
            h = np.dot(h, w) + b
            if k < self.n_layers - 1:
                h = np.maximum(h, 0.0)
        return h


class ForwardPass(object):
    """The graph nodes of one forward pass.

    .. attribute:: graph
    .. attribute:: params

        The variable handles of the model parameters.

    .. attribute:: x

        The intra-factor compatibility feature.

    .. attribute:: y

        The judgment logits.

    .. attribute:: reason_logits

        The logits of the reason head, or `None`.

    """

    def __init__(self, graph, params, x, y, reason_logits=None):
        self.graph = graph
        self.params = params
        self.x = x
        self.y = y
        self.reason_logits = reason_logits


class CompatModel(object):
    """The five intra-factor networks, the inter-factor network and the
    partition of the compatibility feature.

    .. attribute:: params

        The flat list of parameter arrays.  Training replaces the arrays;
        nothing else modifies them.

    """

    def __init__(self, config, params):
        shapes = config.param_shapes()
        params = [np.array(p, dtype=np.float64) for p in params]
        if [p.shape for p in params] != shapes:
            raise ConfigError(
                "Parameter shapes do not match %r" % (config,))
        self.config = config
        self.params = params
        self.intra = []
        self.reason_head = None
        start = 0
        for name, sizes in config.layer_sizes():
            net = Mlp(name, start, len(sizes) - 1)
            start = net.stop
            if name == 'inter':
                self.inter = net
            elif name == 'reason':
                self.reason_head = net
            else:
                self.intra.append(net)
        self.partition = config.partition()

    def copy(self):
        return CompatModel(self.config, [p.copy() for p in self.params])

    def param_handles(self, graph):
        """Return the parameters as new variables of `graph`."""
        return [graph.variable(p) for p in self.params]

    def build(self, graph, params, tops, bottoms):
        """Add the forward pass to `graph`.

        `tops` and `bottoms` hold one array per factor, either vectors
        (one outfit) or matrices with one row per outfit.  Returns the
        handles (x, y, reason_logits).
        """
        dims = self.config.feature_dims()
        parts = []
        for f, net, t, b in zip(FACTORS, self.intra, tops, bottoms):
            t = np.asarray(t, dtype=np.float64)
            b = np.asarray(b, dtype=np.float64)
            if t.shape != b.shape or t.shape[-1] != dims[f]:
                raise DatasetError(
                    "%s features have shapes %s and %s, expected %d values"
                    % (f, t.shape, b.shape, dims[f]))
            fused = graph.constant(np.concatenate([t, b], axis=-1))
            parts.append(net.apply(params, fused))
        x = ops.concat(parts)
        y = self.inter.apply(params, x)
        r = None
        if self.reason_head is not None:
            r = self.reason_head.apply(params, x)
        return x, y, r

    def forward_numpy(self, tops, bottoms):
        """Straight-line numpy forward pass returning (x, y)."""
        parts = [
            net.apply_numpy(self.params, np.concatenate(
                [np.asarray(t), np.asarray(b)], axis=-1))
            for net, t, b in zip(self.intra, tops, bottoms)]
        x = np.concatenate(parts, axis=-1)
        return x, self.inter.apply_numpy(self.params, x)


def init_model(config, seed, reason_head=None):
    """Return a new model with parameters drawn uniformly from
    ``[-1/sqrt(fan_in), 1/sqrt(fan_in)]``."""
    if reason_head is not None:
        config = config.replace(reason_head=reason_head)
    rng = np.random.default_rng(seed)
    params = []
    for shape in config.param_shapes():
        fan_in = shape[0] if len(shape) == 2 else params[-1].shape[0]
        bound = 1.0 / np.sqrt(fan_in)
        params.append(rng.uniform(-bound, bound, size=shape))
    logger.debug("Initialized %d parameters (seed %d)",
                 config.n_params(), seed)
    return CompatModel(config, params)


def _features(outfit):
    if isinstance(outfit, OutfitRecord):
        top, bottom = outfit.top, outfit.bottom
    else:
        top, bottom = outfit
    return [top[f] for f in FACTORS], [bottom[f] for f in FACTORS]


def forward(model, outfit, graph=None):
    """Run the model on one outfit, either an :class:`OutfitRecord
    <compat_reason.lib.colorfeat.records.OutfitRecord>` or a (top,
    bottom) pair of :class:`FactorFeatureSet
    <compat_reason.lib.colorfeat.records.FactorFeatureSet>`.

    Returns a :class:`ForwardPass` whose `x` and `y` are vectors.
    """
    if graph is None:
        graph = DiffGraph()
    params = model.param_handles(graph)
    tops, bottoms = _features(outfit)
    x, y, r = model.build(graph, params, tops, bottoms)
    return ForwardPass(graph, params, x, y, r)


def forward_batch(model, batch, graph=None):
    """Like :func:`forward` for a list of records or the result of
    :func:`stack_records
    <compat_reason.lib.colorfeat.records.stack_records>`.  The `x` and
    `y` of the result have one row per outfit."""
    if graph is None:
        graph = DiffGraph()
    if not isinstance(batch, tuple):
        batch = stack_records(batch)
    params = model.param_handles(graph)
    x, y, r = model.build(graph, params, batch[0], batch[1])
    return ForwardPass(graph, params, x, y, r)


def _logit_values(y):
    return np.asarray(getattr(y, 'value', y), dtype=np.float64)


def judgment_indices(y):
    """The predicted judgment index of each row of logits (ties go to
    the lowest index)."""
    return np.argmax(_logit_values(y), axis=-1)


def predict_judgment(y):
    """Return the name of the judgment with the highest logit.  Ties go
    to the first one in the order good, normal, bad.

    >>> predict_judgment([2.0, 1.0, 0.0])
    'good'
    >>> predict_judgment([0.0, 0.0, 0.0])
    'good'
    """
    return JUDGMENTS[int(judgment_indices(y))]


def outfit_score(y):
    """The recommendation score p(good) - p(bad) of one or several
    outfits."""
    p = ops.softmax(_logit_values(y))
    return p[..., GOOD] - p[..., BAD]


def rank_outfits(model, records):
    """Return (score, record) pairs sorted by decreasing score.  Equal
    scores keep the input order."""
    records = list(records)
    if not records:
        return []
    fp = forward_batch(model, records)
    scores = outfit_score(fp.y)
    order = sorted(range(len(records)), key=lambda i: -scores[i])
    return [(float(scores[i]), records[i]) for i in order]
