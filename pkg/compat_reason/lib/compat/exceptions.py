# -*- coding: UTF-8 -*-
# Copyright 2026 compat-reason contributors
# License: BSD (see file COPYING for details)

"""The exceptions raised by :mod:`compat_reason`.

Every error that the command line should report as a one-line message
derives from :class:`CompatReasonError`.

"""


class CompatReasonError(Exception):
    """Base class of all errors raised on purpose by this package."""


class ConfigError(CompatReasonError, ValueError):
    """An unknown setting, an unknown config section or an invalid value."""


class GraphError(CompatReasonError):
    """Misuse of a :class:`DiffGraph
    <compat_reason.lib.autodiff.graph.DiffGraph>`."""


class ShapeError(GraphError, ValueError):
    pass


class CrossGraphError(GraphError, ValueError):
    pass


class NonFiniteError(GraphError, ArithmeticError):
    pass


class ColorError(CompatReasonError, ValueError):
    pass


class FeatureFileError(CompatReasonError, ValueError):
    """A feature file could not be parsed.

    .. attribute:: filename
    .. attribute:: lineno

        1-based line number of the offending record, or `None` when the
        problem concerns the file as a whole.

    """

    def __init__(self, msg, filename=None, lineno=None):
        self.filename = filename
        self.lineno = lineno
        if filename is not None:
            if lineno is None:
                msg = "%s: %s" % (filename, msg)
            else:
                msg = "%s:%d: %s" % (filename, lineno, msg)
        super(FeatureFileError, self).__init__(msg)


class CheckpointError(CompatReasonError, ValueError):
    pass


class DatasetError(CompatReasonError, ValueError):
    pass


class TrainingDiverged(CompatReasonError, ArithmeticError):
    pass


class ExplanationError(CompatReasonError, KeyError):

    def __str__(self):
        # KeyError would repr() the message
        return str(self.args[0]) if self.args else ''


class SelfCheckFailed(CompatReasonError):
    """A finite-difference check of the gradients failed."""
