# -*- coding: UTF-8 -*-
# Copyright 2026 compat-reason contributors
# License: BSD (see file COPYING for details)

"""Drawing batches."""

import logging

import numpy as np

from compat_reason.lib.compat.choicelists import JUDGMENTS
from compat_reason.lib.compat.exceptions import DatasetError

logger = logging.getLogger(__name__)


class BalancedSampler(object):
    """Draws indices so that every judgment is equally frequent.

    A draw picks one of the classes uniformly, then one index of that
    class uniformly.  Classes without any sample are skipped, so with
    two non-empty classes each gets half of the draws.

    """

    def __init__(self, labels, seed=0, n_classes=len(JUDGMENTS)):
        labels = np.asarray(labels, dtype=np.int64)
        self.pools = [np.flatnonzero(labels == c) for c in range(n_classes)]
        self.classes = [c for c, p in enumerate(self.pools) if len(p)]
        if not self.classes:
            raise DatasetError("Cannot sample from an empty dataset")
        for c, p in enumerate(self.pools):
            if not len(p):
                logger.warning("No sample of class %d, it will not be drawn",
                               c)
        self.rng = np.random.default_rng(seed)

    def draw(self, n):
        """Return an array of `n` sample indices."""
        classes = np.asarray(self.classes)[
            self.rng.integers(len(self.classes), size=n)]
        result = np.empty(n, dtype=np.int64)
        for i, c in enumerate(classes):
            pool = self.pools[c]
            result[i] = pool[self.rng.integers(len(pool))]
        return result


class ShuffleSampler(object):
    """Visits all samples in a random order, reshuffling when all have
    been drawn."""

    def __init__(self, labels, seed=0):
        self.n = len(labels)
        if not self.n:
            raise DatasetError("Cannot sample from an empty dataset")
        self.rng = np.random.default_rng(seed)
        self.order = self.rng.permutation(self.n)
        self.pos = 0

    def draw(self, n):
        result = []
        while len(result) < n:
            if self.pos == self.n:
                self.order = self.rng.permutation(self.n)
                self.pos = 0
            take = min(n - len(result), self.n - self.pos)
            result.extend(self.order[self.pos:self.pos + take])
            self.pos += take
        return np.asarray(result, dtype=np.int64)
