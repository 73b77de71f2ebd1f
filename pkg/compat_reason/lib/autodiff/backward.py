# -*- coding: UTF-8 -*-
# Copyright 2026 compat-reason contributors
# License: BSD (see file COPYING for details)

"""Reverse-mode differentiation over a :class:`DiffGraph
<compat_reason.lib.autodiff.graph.DiffGraph>`.

"""

import numpy as np

from compat_reason.lib.compat.exceptions import GraphError, ShapeError

from .graph import VarHandle
from . import ops


def grad(output, wrt, create_graph=False):
    """Return the gradients of the scalar `output` with respect to each
    handle in `wrt`.

    The backward pass appends its nodes to the graph of `output`.  When
    `create_graph` is true, the returned handles are these nodes, so they
    can be differentiated again.  Otherwise they are detached constants
    holding the same values.

    A handle in `wrt` which `output` does not depend on gets a zero
    gradient.

    Adjoints are accumulated in a fixed order (decreasing node id, then
    parent order), so the result is bitwise reproducible.
    """
    graph = output.graph
    wrt = list(wrt)
    for h in wrt:
        if not isinstance(h, VarHandle) or h.graph is not graph:
            raise GraphError("grad: %r is not a node of the output graph" % (h,))
        if not h.requires_grad:
            raise GraphError("grad: %r does not require a gradient" % (h,))
    if output.shape != ():
        raise ShapeError("grad: output must be a scalar, not %s" % (
            output.shape,))
    nodes = graph.nodes
    end = output.id
    targets = set(h.id for h in wrt if h.id <= end)

    # reach[i]: node i depends on at least one of the wrt nodes
    reach = np.zeros(end + 1, dtype=bool)
    if targets:
        for i in range(min(targets), end + 1):
            if i in targets:
                reach[i] = True
            elif nodes[i].requires_grad:
                for p in nodes[i].parents:
                    if reach[p]:
                        reach[i] = True
                        break

    adjoints = dict()
    if reach[end]:
        adjoints[end] = graph.constant(1.0)
        for i in range(end, min(targets) - 1, -1):
            g = adjoints.get(i)
            if g is None:
                continue
            node = nodes[i]
            if not node.parents:
                continue
            needs = tuple(bool(reach[p]) for p in node.parents)
            if not any(needs):
                continue
            grads = ops.VJPS[node.kind](node, VarHandle(graph, i), g, needs)
            for p, need, gp in zip(node.parents, needs, grads):
                if not need or gp is None:
                    continue
                if p in adjoints:
                    adjoints[p] = ops.add(adjoints[p], gp)
                else:
                    adjoints[p] = gp

    result = []
    for h in wrt:
        gh = adjoints.get(h.id)
        if gh is None:
            gh = graph.constant(np.zeros(h.shape))
        elif not create_graph:
            gh = graph.constant(gh.value)
        result.append(gh)
    return result


def grad_values(output, wrt):
    """Like :func:`grad` but return plain numpy arrays."""
    return [np.array(h.value) for h in grad(output, wrt)]
