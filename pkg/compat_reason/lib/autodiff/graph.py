# -*- coding: UTF-8 -*-
# Copyright 2026 compat-reason contributors
# License: BSD (see file COPYING for details)

"""The differentiable computation record.

A :class:`DiffGraph` is an append-only list of nodes.  A node is only
ever appended after its parents, so the list order is a topological
order, and the backward pass simply walks it from the end.

Values are computed eagerly when a node is created, stored as read-only
64-bit arrays and checked for NaN/Inf.

"""

import numpy as np

from compat_reason.lib.compat.exceptions import (
    CrossGraphError, GraphError, NonFiniteError)


class Node(object):
    """One node of a :class:`DiffGraph`.

    .. attribute:: value

        A read-only float64 array.

    .. attribute:: kind

        The name of the operation which produced this node (a key of
        :data:`compat_reason.lib.autodiff.ops.VJPS`), or ``"constant"``
        or ``"variable"``.

    .. attribute:: parents

        Tuple of the ids of the operand nodes.

    .. attribute:: attrs

        Operation parameters (axis, slice bounds, masks...).

    """

    __slots__ = ('id', 'value', 'kind', 'parents', 'attrs', 'requires_grad')

    def __init__(self, id, value, kind, parents, attrs, requires_grad):
        self.id = id
        self.value = value
        self.kind = kind
        self.parents = parents
        self.attrs = attrs
        self.requires_grad = requires_grad

    def __repr__(self):
        return "Node(%d, %s, shape=%s)" % (
            self.id, self.kind, self.value.shape)


class VarHandle(object):
    """A reference to one node of one graph.

    Arithmetic operators are installed by
    :mod:`compat_reason.lib.autodiff.ops`.

    """

    __slots__ = ('graph', 'id')
    __array_ufunc__ = None  # let numpy defer to our reflected operators

    def __init__(self, graph, id):
        self.graph = graph
        self.id = id

    @property
    def node(self):
        return self.graph.nodes[self.id]

    @property
    def value(self):
        return self.graph.nodes[self.id].value

    @property
    def shape(self):
        return self.graph.nodes[self.id].value.shape

    @property
    def ndim(self):
        return self.graph.nodes[self.id].value.ndim

    @property
    def requires_grad(self):
        return self.graph.nodes[self.id].requires_grad

    def item(self):
        return float(self.value)

    def __repr__(self):
        return "VarHandle(%d, %s)" % (self.id, self.shape)


class DiffGraph(object):
    """A differentiable computation record.

    Build one graph per forward pass; graphs are never shared between
    threads while they grow.

    """

    def __init__(self, check_finite=True):
        self.nodes = []
        self.check_finite = check_finite

    def __len__(self):
        return len(self.nodes)

    def add_node(self, value, kind, parents=(), attrs=None,
                 requires_grad=None):
        value = np.array(value, dtype=np.float64)
        if self.check_finite and not np.all(np.isfinite(value)):
            raise NonFiniteError(
                "Operation %s produced a non-finite value" % kind)
        value.setflags(write=False)
        if requires_grad is None:
            requires_grad = any(
                self.nodes[p].requires_grad for p in parents)
        node = Node(len(self.nodes), value, kind, tuple(parents),
                    attrs or {}, requires_grad)
        self.nodes.append(node)
        return VarHandle(self, node.id)

    def constant(self, value):
        return self.add_node(value, 'constant', requires_grad=False)

    def variable(self, value):
        """Return a new leaf which gradients can be taken against.  The
        value is copied, later changes of `value` do not affect the
        graph."""
        return self.add_node(value, 'variable', requires_grad=True)

    def lift(self, x):
        """Return `x` as a handle of this graph.  Numbers and arrays
        become constants."""
        if isinstance(x, VarHandle):
            if x.graph is not self:
                raise CrossGraphError(
                    "Cannot combine nodes of different graphs")
            return x
        return self.constant(x)

    def kink_margin(self):
        """Return the smallest distance of any relu input to 0 and of
        any max to its runner-up.  Finite differences with a step well
        below this margin do not cross a kink.

        Exact zeros and exact ties are skipped: they come from dead units
        and stay exact under small perturbations.
        """
        margin = np.inf
        for node in self.nodes:
            if node.kind == 'relu':
                v = np.abs(self.nodes[node.parents[0]].value)
                v = v[v > 0]
                if v.size:
                    margin = min(margin, float(np.min(v)))
            elif node.kind == 'max':
                v = self.nodes[node.parents[0]].value
                if v.shape[-1] > 1:
                    top2 = -np.partition(-v, 1, axis=-1)[..., :2]
                    gaps = top2[..., 0] - top2[..., 1]
                    gaps = gaps[gaps > 0]
                    if gaps.size:
                        margin = min(margin, float(np.min(gaps)))
        return margin


def graph_of(*operands):
    """Return the common graph of the given operands.  Operands which
    are not handles are ignored."""
    graph = None
    for x in operands:
        if isinstance(x, VarHandle):
            if graph is None:
                graph = x.graph
            elif x.graph is not graph:
                raise CrossGraphError(
                    "Cannot combine nodes of different graphs")
    if graph is None:
        raise GraphError("At least one operand must be a graph node")
    return graph
