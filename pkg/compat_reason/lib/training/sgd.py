# -*- coding: UTF-8 -*-
# Copyright 2026 compat-reason contributors
# License: BSD (see file COPYING for details)

"""The parameter update and the learning rate schedule.

>>> lr_at(0)
0.01

"""

import math

import numpy as np

from compat_reason.lib.compat.exceptions import ShapeError


def sgd_step(params, grads, lr, weight_decay):
    """Return the updated parameters ``p - lr * (g + weight_decay * p)``.
    The given arrays are not modified."""
    if len(params) != len(grads):
        raise ShapeError("%d parameters but %d gradients" % (
            len(params), len(grads)))
    result = []
    for p, g in zip(params, grads):
        p = np.asarray(p, dtype=np.float64)
        g = np.asarray(g, dtype=np.float64)
        if p.shape != g.shape:
            raise ShapeError("Gradient of shape %s for parameter %s" % (
                g.shape, p.shape))
        result.append(p - lr * (g + weight_decay * p))
    return result


def lr_at(epoch, lr0=0.01, drop_every=30, factor=10.0):
    """The learning rate of the given (0-based) epoch."""
    return lr0 / factor ** int(math.floor(epoch / float(drop_every)))
