# -*- coding: UTF-8 -*-
# Copyright 2026 compat-reason contributors
# License: BSD (see file COPYING for details)

"""The three reason regularizers.

Each takes an F vector (or a matrix of F vectors) and the index of the
labelled reason (or one index per row), and returns a scalar (or one
value per row).  Linear and square are zero exactly when the labelled
reason has the largest F value.

"""

import numpy as np

from compat_reason.lib.autodiff import ops
from compat_reason.lib.compat.choicelists import reason_index
from compat_reason.lib.compat.exceptions import ConfigError


def _target(gt):
    if isinstance(gt, str):
        return reason_index(gt)
    return gt


def reg_ce(F, gt):
    """Cross entropy ``-log softmax(F)[gt]``."""
    return ops.softmax_cross_entropy(F, _target(gt))


def reg_linear(F, gt):
    """``max(F) - F[gt]``."""
    return ops.subtract(ops.max(F), ops.pick(F, _target(gt)))


def reg_square(F, gt):
    """``(max(F) - F[gt])**2``."""
    return ops.square(reg_linear(F, gt))


REGULARIZERS = {
    'ce': reg_ce,
    'linear': reg_linear,
    'square': reg_square,
}

ALIASES = {
    'cross_entropy': 'ce',
}


def get_regularizer(name):
    """Return the regularizer function of the given name."""
    key = ALIASES.get(name, name)
    try:
        return REGULARIZERS[key]
    except KeyError:
        raise ConfigError("Unknown regularizer %r (expected one of %s)" % (
            name, ", ".join(sorted(REGULARIZERS))))


def regularizer_values(F, gt, name):
    """Plain numpy values of a regularizer, for reporting."""
    return np.asarray(get_regularizer(name)(F, gt).value)
