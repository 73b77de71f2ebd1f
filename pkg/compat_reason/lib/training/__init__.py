# -*- coding: UTF-8 -*-
# Copyright 2026 compat-reason contributors
# License: BSD (see file COPYING for details)


"""Training the compatibility network together with the reason
regularizer.

Plain SGD with weight decay added to the gradient, a learning rate
divided by 10 every 30 epochs, and class-balanced sampling: each draw
first picks one of the three judgments uniformly, then an outfit of
that judgment.

.. autosummary::
   :toctree:

    sampler
    sgd
    loop

"""

from compat_reason.lib.compat.plugin import Plugin as BasePlugin
from compat_reason.lib.compat.exceptions import ConfigError


class Plugin(BasePlugin):
    "See :class:`compat_reason.lib.compat.plugin.Plugin`."

    verbose_name = "Training"

    lr0 = 0.01
    """The initial learning rate."""

    weight_decay = 0.0005

    epochs = 70

    lr_drop_every = 30
    """Divide the learning rate by :attr:`lr_drop_factor` every this many
    epochs."""

    lr_drop_factor = 10.0

    batch_size = 64

    alpha = 1.0
    """The weight of the reason regularizer.  0 trains the judgment
    alone."""

    regularizer = 'ce'
    """One of ``ce``, ``linear`` or ``square``."""

    seed = 0

    balanced = True
    """Whether to draw batches with the class-balanced sampler.
    Otherwise every epoch visits the records in a random order."""

    eval_every = 1
    """Compute validation metrics every this many epochs (0 for
    never)."""

    def configure(self, **kw):
        super(Plugin, self).configure(**kw)
        self.check()

    def check(self):
        if self.lr0 <= 0:
            raise ConfigError("lr0 must be positive (got %r)" % self.lr0)
        if self.alpha < 0:
            raise ConfigError("alpha must not be negative (got %r)" %
                              self.alpha)
        if self.batch_size <= 0 or self.epochs < 0:
            raise ConfigError("Invalid batch_size or epochs")
        if self.lr_drop_every <= 0 or self.lr_drop_factor <= 0:
            raise ConfigError("Invalid learning rate schedule")
        if self.regularizer not in ('ce', 'cross_entropy', 'linear',
                                    'square'):
            raise ConfigError("Unknown regularizer %r" % self.regularizer)

    def lr_at(self, epoch):
        from .sgd import lr_at
        return lr_at(epoch, self.lr0, self.lr_drop_every,
                     self.lr_drop_factor)
