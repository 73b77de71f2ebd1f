# -*- coding: UTF-8 -*-
# Copyright 2026 compat-reason contributors
# License: BSD (see file COPYING for details)

"""The primitive operations.

Each operation computes its value with numpy and appends a node to the
graph of its operands.  Its vector-Jacobian product (the entry in
:data:`VJPS`) is written with these same operations, which is what
makes every gradient differentiable again.

Broadcasting is limited to what the networks need: adding a bias vector
to each row of a matrix.  Operations which reduce or slice work along
the last axis unless told otherwise.

"""

import numpy as np

from compat_reason.lib.compat.exceptions import ShapeError

from .graph import VarHandle, graph_of

VJPS = dict()
"""Maps an operation kind to its vector-Jacobian product.

A VJP is called as ``vjp(node, out, g, needs)`` where `node` is the
:class:`Node <compat_reason.lib.autodiff.graph.Node>`, `out` its handle,
`g` the handle of the incoming gradient, and `needs` a tuple of booleans
telling which parent gradients are wanted.  It returns one handle (or
`None`) per parent.
"""


def vjp(kind):
    def decorator(func):
        VJPS[kind] = func
        return func
    return decorator


def _operands(*xs):
    g = graph_of(*xs)
    return [g] + [g.lift(x) for x in xs]


def _parent(node, out, i):
    return VarHandle(out.graph, node.parents[i])


def _is_row_broadcast(a, b):
    return len(a) == 2 and len(b) == 1 and a[1] == b[0]


def constant(graph, value):
    return graph.constant(value)


def variable(graph, value):
    return graph.variable(value)


def add(a, b):
    g, a, b = _operands(a, b)
    if a.shape != b.shape and not _is_row_broadcast(a.shape, b.shape):
        raise ShapeError("add: %s and %s" % (a.shape, b.shape))
    return g.add_node(a.value + b.value, 'add', (a.id, b.id))


@vjp('add')
def _add_vjp(node, out, g, needs):
    b = _parent(node, out, 1)
    gb = None
    if needs[1]:
        gb = g if b.shape == g.shape else sum(g, axis=0)
    return (g if needs[0] else None, gb)


def subtract(a, b):
    g, a, b = _operands(a, b)
    if a.shape != b.shape and not _is_row_broadcast(a.shape, b.shape):
        raise ShapeError("subtract: %s and %s" % (a.shape, b.shape))
    return g.add_node(a.value - b.value, 'subtract', (a.id, b.id))


@vjp('subtract')
def _subtract_vjp(node, out, g, needs):
    b = _parent(node, out, 1)
    gb = None
    if needs[1]:
        gb = scale(g, -1.0)
        if b.shape != g.shape:
            gb = sum(gb, axis=0)
    return (g if needs[0] else None, gb)


def multiply(a, b):
    """Elementwise product of two operands of the same shape.  A plain
    Python number as one operand is passed to :func:`scale`."""
    if isinstance(a, (int, float)) and isinstance(b, VarHandle):
        return scale(b, a)
    if isinstance(b, (int, float)) and isinstance(a, VarHandle):
        return scale(a, b)
    g, a, b = _operands(a, b)
    if a.shape != b.shape:
        raise ShapeError("multiply: %s and %s" % (a.shape, b.shape))
    return g.add_node(a.value * b.value, 'multiply', (a.id, b.id))


@vjp('multiply')
def _multiply_vjp(node, out, g, needs):
    a, b = _parent(node, out, 0), _parent(node, out, 1)
    return (multiply(g, b) if needs[0] else None,
            multiply(g, a) if needs[1] else None)


def divide(a, b):
    g, a, b = _operands(a, b)
    if a.shape != b.shape:
        raise ShapeError("divide: %s and %s" % (a.shape, b.shape))
    return g.add_node(a.value / b.value, 'divide', (a.id, b.id))


@vjp('divide')
def _divide_vjp(node, out, g, needs):
    b = _parent(node, out, 1)
    ga = divide(g, b) if needs[0] else None
    gb = None
    if needs[1]:
        gb = scale(divide(multiply(g, out), b), -1.0)
    return (ga, gb)


def scale(a, c):
    """Multiply by the Python number `c`."""
    c = float(c)
    return a.graph.add_node(a.value * c, 'scale', (a.id,), dict(c=c))


@vjp('scale')
def _scale_vjp(node, out, g, needs):
    return (scale(g, node.attrs['c']),)


def negate(a):
    return scale(a, -1.0)


def matrix_vector_product(m, v):
    g, m, v = _operands(m, v)
    if m.ndim != 2 or v.ndim != 1 or m.shape[1] != v.shape[0]:
        raise ShapeError(
            "matrix_vector_product: %s and %s" % (m.shape, v.shape))
    return g.add_node(np.dot(m.value, v.value), 'matvec', (m.id, v.id))


@vjp('matvec')
def _matvec_vjp(node, out, g, needs):
    m, v = _parent(node, out, 0), _parent(node, out, 1)
    gm = gv = None
    if needs[0]:
        gm = matrix_product(reshape(g, (g.shape[0], 1)),
                            reshape(v, (1, v.shape[0])))
    if needs[1]:
        gv = matrix_vector_product(transpose(m), g)
    return (gm, gv)


def matrix_product(a, b):
    g, a, b = _operands(a, b)
    if a.ndim != 2 or b.ndim != 2 or a.shape[1] != b.shape[0]:
        raise ShapeError("matrix_product: %s and %s" % (a.shape, b.shape))
    return g.add_node(np.dot(a.value, b.value), 'matmul', (a.id, b.id))


@vjp('matmul')
def _matmul_vjp(node, out, g, needs):
    a, b = _parent(node, out, 0), _parent(node, out, 1)
    return (matrix_product(g, transpose(b)) if needs[0] else None,
            matrix_product(transpose(a), g) if needs[1] else None)


def transpose(a):
    if a.ndim != 2:
        raise ShapeError("transpose: %s" % (a.shape,))
    return a.graph.add_node(a.value.T, 'transpose', (a.id,))


@vjp('transpose')
def _transpose_vjp(node, out, g, needs):
    return (transpose(g),)


def reshape(a, shape):
    shape = tuple(shape)
    if int(np.prod(shape)) != a.value.size:
        raise ShapeError("reshape: %s to %s" % (a.shape, shape))
    return a.graph.add_node(a.value.reshape(shape), 'reshape', (a.id,))


@vjp('reshape')
def _reshape_vjp(node, out, g, needs):
    return (reshape(g, _parent(node, out, 0).shape),)


def concat(parts):
    """Concatenate along the last axis."""
    parts = list(parts)
    g = graph_of(*parts)
    parts = [g.lift(p) for p in parts]
    lead = parts[0].shape[:-1]
    for p in parts:
        if p.ndim == 0 or p.shape[:-1] != lead:
            raise ShapeError("concat: %s" % [q.shape for q in parts])
    value = np.concatenate([p.value for p in parts], axis=-1)
    sizes = tuple(p.shape[-1] for p in parts)
    return g.add_node(value, 'concat', [p.id for p in parts],
                      dict(sizes=sizes))


@vjp('concat')
def _concat_vjp(node, out, g, needs):
    grads = []
    offset = 0
    for size, need in zip(node.attrs['sizes'], needs):
        grads.append(slice(g, offset, offset + size) if need else None)
        offset += size
    return grads


def slice(a, start, stop):
    """Return ``a[..., start:stop]``."""
    width = a.shape[-1] if a.ndim else 0
    if not 0 <= start < stop <= width:
        raise ShapeError("slice [%d:%d] of %s" % (start, stop, a.shape))
    return a.graph.add_node(
        a.value[..., start:stop], 'slice', (a.id,),
        dict(start=start, stop=stop, width=width))


@vjp('slice')
def _slice_vjp(node, out, g, needs):
    at = node.attrs
    return (pad(g, at['start'], at['width'] - at['stop']),)


def pad(a, before, after):
    """Add `before` and `after` zeros along the last axis."""
    widths = [(0, 0)] * (a.ndim - 1) + [(before, after)]
    return a.graph.add_node(
        np.pad(a.value, widths), 'pad', (a.id,),
        dict(before=before, after=after))


@vjp('pad')
def _pad_vjp(node, out, g, needs):
    before = node.attrs['before']
    n = _parent(node, out, 0).shape[-1]
    return (slice(g, before, before + n),)


def sum(a, axis=None):
    """Sum all elements, or along one axis."""
    if axis is not None and not -a.ndim <= axis < a.ndim:
        raise ShapeError("sum: axis %s of %s" % (axis, a.shape))
    if axis is not None and axis < 0:
        axis += a.ndim
    return a.graph.add_node(
        np.sum(a.value, axis=axis), 'sum', (a.id,), dict(axis=axis))


@vjp('sum')
def _sum_vjp(node, out, g, needs):
    a = _parent(node, out, 0)
    return (expand(g, a.shape, node.attrs['axis']),)


def expand(a, shape, axis=None):
    """Inverse of :func:`sum`: repeat a scalar (``axis=None``) or insert
    and repeat the given axis."""
    shape = tuple(shape)
    if axis is None:
        if a.ndim != 0:
            raise ShapeError("expand: %s is not a scalar" % (a.shape,))
        value = np.broadcast_to(a.value, shape)
    else:
        reduced = shape[:axis] + shape[axis + 1:]
        if a.shape != reduced:
            raise ShapeError("expand: %s to %s along %d" % (
                a.shape, shape, axis))
        value = np.broadcast_to(np.expand_dims(a.value, axis), shape)
    return a.graph.add_node(value, 'expand', (a.id,), dict(axis=axis))


@vjp('expand')
def _expand_vjp(node, out, g, needs):
    return (sum(g, axis=node.attrs['axis']),)


def mean(a, axis=None):
    n = a.value.size if axis is None else a.shape[axis]
    return scale(sum(a, axis), 1.0 / n)


def relu(a):
    return a.graph.add_node(np.maximum(a.value, 0.0), 'relu', (a.id,))


@vjp('relu')
def _relu_vjp(node, out, g, needs):
    # subgradient 0 at 0; the mask is a constant so relu'' = 0
    a = _parent(node, out, 0)
    mask = out.graph.constant((a.value > 0).astype(np.float64))
    return (multiply(g, mask),)


def exp(a):
    return a.graph.add_node(np.exp(a.value), 'exp', (a.id,))


@vjp('exp')
def _exp_vjp(node, out, g, needs):
    return (multiply(g, out),)


def log(a):
    with np.errstate(divide='ignore', invalid='ignore'):
        value = np.log(a.value)
    return a.graph.add_node(value, 'log', (a.id,))


@vjp('log')
def _log_vjp(node, out, g, needs):
    return (divide(g, _parent(node, out, 0)),)


def _onehot_argmax(value):
    # np.argmax returns the lowest index among ties
    idx = np.argmax(value, axis=-1)
    mask = np.zeros(value.shape)
    np.put_along_axis(mask, np.expand_dims(idx, -1), 1.0, axis=-1)
    return mask


def max(a):
    """Maximum along the last axis.  The gradient flows to the first
    maximal element only."""
    if a.ndim == 0:
        raise ShapeError("max of a scalar")
    return a.graph.add_node(np.max(a.value, axis=-1), 'max', (a.id,))


@vjp('max')
def _max_vjp(node, out, g, needs):
    a = _parent(node, out, 0)
    mask = out.graph.constant(_onehot_argmax(a.value))
    return (multiply(expand(g, a.shape, a.ndim - 1), mask),)


def max_index(a):
    """Index of the maximum along the last axis, ties to the lowest
    index.  The result is a constant node holding the indices as
    floats; use :func:`indices` to get integers."""
    if a.ndim == 0:
        raise ShapeError("max_index of a scalar")
    return a.graph.add_node(
        np.argmax(a.value, axis=-1), 'max_index', (a.id,),
        requires_grad=False)


def indices(h):
    return np.asarray(h.value, dtype=np.int64)


def square(a):
    return multiply(a, a)


def pick(a, index):
    """Select one element per row: ``a[..., index]`` where `index` is
    an int (for a vector) or an int array with one entry per row."""
    mask = np.zeros(a.shape)
    if a.ndim == 1:
        mask[int(index)] = 1.0
    else:
        index = np.asarray(index, dtype=np.int64)
        mask[np.arange(a.shape[0]), index] = 1.0
    return sum(multiply(a, a.graph.constant(mask)), axis=a.ndim - 1)


def softmax_cross_entropy(logits, target):
    """Return ``-log softmax(logits)[target]``.

    For a vector of logits `target` is an int and the result a scalar.
    For a matrix `target` holds one class index per row and the result
    has one loss per row.

    Built from primitive operations, so it can be differentiated to any
    order.  The max shift is a constant; it cancels exactly in the
    derivative.
    """
    g = logits.graph
    ax = logits.ndim - 1
    shift = np.max(logits.value, axis=-1)
    if ax == 0:
        centered = subtract(logits, expand(g.constant(shift), logits.shape))
    else:
        centered = subtract(
            logits, expand(g.constant(shift), logits.shape, ax))
    lse = add(log(sum(exp(centered), axis=ax)), g.constant(shift))
    return subtract(lse, pick(logits, target))


def softmax(values):
    """Plain numpy softmax along the last axis (not a graph op)."""
    values = np.asarray(values, dtype=np.float64)
    e = np.exp(values - np.max(values, axis=-1, keepdims=True))
    return e / np.sum(e, axis=-1, keepdims=True)


def _reflect(func):
    def reflected(self, other):
        return func(other, self)
    return reflected


VarHandle.__add__ = add
VarHandle.__radd__ = _reflect(add)
VarHandle.__sub__ = subtract
VarHandle.__rsub__ = _reflect(subtract)
VarHandle.__mul__ = multiply
VarHandle.__rmul__ = _reflect(multiply)
VarHandle.__truediv__ = divide
VarHandle.__neg__ = negate
VarHandle.__matmul__ = matrix_product
