# -*- coding: UTF-8 -*-
# Copyright 2026 compat-reason contributors
# License: BSD (see file COPYING for details)

"""Contributions, positive contributions and reasons.

All functions take the nodes `x` and `y` of one forward pass.  They
accept a single outfit (`x` a vector, `y` three logits) or a batch (one
row per outfit).  A batch works because the rows of a batch do not
interact: the gradient of the summed logits of column `j` with respect
to `x` holds the per-row gradients.

Reasons are located in `x` by `ranges`, one (start, stop) pair per
reason in the order color, print, design.  The default splits `x` like
:meth:`ModelConfig.reason_ranges
<compat_reason.lib.compatnet.models.ModelConfig.reason_ranges>` does.

"""

import numpy as np

from compat_reason.lib.autodiff import ops
from compat_reason.lib.autodiff.backward import grad
from compat_reason.lib.compat.choicelists import (
    FACTORS, REASONS, GOOD, NORMAL, BAD, judgment_index)
from compat_reason.lib.compat.exceptions import ConfigError, ShapeError

FORMULATIONS = ('F1', 'F2', 'F3', 'F4', 'F5', 'F6')


def default_ranges(x_dim):
    """The reason ranges of an `x` made of five equal factor segments."""
    n, rest = divmod(x_dim, len(FACTORS))
    if rest or n == 0:
        raise ShapeError("Cannot split %d elements into %d factors" % (
            x_dim, len(FACTORS)))
    return ((0, n), (n, 2 * n), (2 * n, x_dim))


def _ranges(x, ranges):
    if ranges is None:
        return default_ranges(x.shape[-1])
    if isinstance(ranges, dict):
        return tuple(ranges[r] for r in REASONS)
    return tuple(ranges)


def _judgment(j):
    if isinstance(j, str):
        return judgment_index(j)
    return int(j)


def logit_gradient(x, y, j):
    """Return the node ``dy_j/dx``, itself differentiable."""
    j = _judgment(j)
    total = ops.sum(ops.slice(y, j, j + 1))
    return grad(total, [x], create_graph=True)[0]


def reason_means(values, ranges):
    """Average `values` over each reason range.  Returns a node with a
    last axis of length 3."""
    parts = []
    for start, stop in ranges:
        s = ops.slice(values, start, stop)
        m = ops.scale(ops.sum(s, axis=s.ndim - 1), 1.0 / (stop - start))
        parts.append(ops.reshape(m, m.shape + (1,)))
    return ops.concat(parts)


def contrib(x, y, j):
    """The contribution ``dy_j/dx_i * relu(x_i)`` of each element of
    `x`."""
    return ops.multiply(logit_gradient(x, y, j), ops.relu(x))


def positive_contrib(x, y, j, ranges=None):
    """The positive contribution of each reason to judgment `j`: the
    mean of ``relu(dy_j/dx_i) * relu(x_i)`` over the reason's
    elements."""
    g = logit_gradient(x, y, j)
    return reason_means(ops.multiply(ops.relu(g), ops.relu(x)),
                        _ranges(x, ranges))


def contribution_difference(x, y, j, ranges=None):
    """``C+_j - C+_normal`` per reason."""
    return ops.subtract(positive_contrib(x, y, j, ranges),
                        positive_contrib(x, y, NORMAL, ranges))


def _argmax(values):
    # np.argmax returns the first maximum, i.e. color before print
    # before design
    return np.argmax(np.asarray(getattr(values, 'value', values)), axis=-1)


def _reason_of(values):
    idx = _argmax(values)
    if np.ndim(idx) == 0:
        return REASONS[int(idx)]
    return idx


def reason_good(x, y, ranges=None):
    """The reason why an outfit is good.  Returns a reason name for one
    outfit or an array of reason indices for a batch."""
    return _reason_of(contribution_difference(x, y, GOOD, ranges))


def reason_bad(x, y, ranges=None):
    return _reason_of(contribution_difference(x, y, BAD, ranges))


def formulation_score(x, y, j, formulation, ranges=None):
    """Score each reason for judgment `j` using one of the formulations
    compared in the ablation:

    ==== ===============================================
    F1   mean contribution
    F2   mean contribution minus that of normal
    F3   mean of ``relu(dy_j/dx_i) * x_i``
    F4   positive contribution
    F5   relu of F2
    F6   positive contribution minus that of normal
    ==== ===============================================

    """
    ranges = _ranges(x, ranges)
    if formulation == 'F1':
        return reason_means(contrib(x, y, j), ranges)
    if formulation == 'F2':
        return ops.subtract(formulation_score(x, y, j, 'F1', ranges),
                            formulation_score(x, y, NORMAL, 'F1', ranges))
    if formulation == 'F3':
        return reason_means(
            ops.multiply(ops.relu(logit_gradient(x, y, j)), x), ranges)
    if formulation == 'F4':
        return positive_contrib(x, y, j, ranges)
    if formulation == 'F5':
        return ops.relu(formulation_score(x, y, j, 'F2', ranges))
    if formulation == 'F6':
        return contribution_difference(x, y, j, ranges)
    raise ConfigError("Unknown formulation %r (expected one of %s)" % (
        formulation, ", ".join(FORMULATIONS)))


def reason_scores(x, y, judgments, formulation='F6', ranges=None):
    """Return a numpy array with the reason scores of each row of a
    batch for the given judgment index of that row.  Rows judged normal
    get zeros."""
    judgments = np.asarray(judgments)
    x_rows = x.shape[0]
    scores = np.zeros((x_rows, len(REASONS)))
    for j in (GOOD, BAD):
        rows = judgments == j
        if np.any(rows):
            s = formulation_score(x, y, j, formulation, ranges).value
            scores[rows] = s[rows]
    return scores


def predict_reasons(x, y, formulation='F6', ranges=None):
    """Reason indices for a batch, dispatched on the predicted
    judgment of each row: -1 for normal."""
    judgments = np.argmax(y.value, axis=-1)
    scores = reason_scores(x, y, judgments, formulation, ranges)
    result = np.argmax(scores, axis=-1)
    result[judgments == NORMAL] = -1
    return result


def predict_reason(model, x, y):
    """Return the reason of the predicted judgment of one outfit, or
    `None` if it is predicted normal."""
    ranges = model.config.reason_ranges()
    j = int(np.argmax(y.value))
    if j == GOOD:
        return reason_good(x, y, ranges)
    if j == BAD:
        return reason_bad(x, y, ranges)
    return None


def f_vector(x, y, gt, ranges=None):
    """The F vector ``C+_gt - C+_normal`` of the ground-truth judgment
    `gt` (a judgment name or index, or one index per row of a batch).

    Rows whose ground truth is normal are exactly zero.
    """
    ranges = _ranges(x, ranges)
    g = y.graph
    if x.ndim == 1:
        gt = np.array([_judgment(gt)])
    else:
        gt = np.asarray(gt, dtype=np.int64)
        if gt.shape != (x.shape[0],):
            raise ShapeError("f_vector: %d labels for %d rows" % (
                gt.size, x.shape[0]))
    if not np.any(gt != NORMAL):
        return g.constant(np.zeros(
            (len(REASONS),) if x.ndim == 1 else (x.shape[0], len(REASONS))))
    normal = positive_contrib(x, y, NORMAL, ranges)
    total = None
    for j in (GOOD, BAD):
        rows = gt == j
        if not np.any(rows):
            continue
        mask = np.repeat(rows.astype(np.float64)[:, None], len(REASONS), 1)
        if x.ndim == 1:
            mask = mask[0]
        part = ops.multiply(
            ops.subtract(positive_contrib(x, y, j, ranges), normal),
            g.constant(mask))
        total = part if total is None else ops.add(total, part)
    return total

