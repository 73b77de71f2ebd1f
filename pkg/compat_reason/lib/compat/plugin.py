# -*- coding: UTF-8 -*-
# Copyright 2026 compat-reason contributors
# License: BSD (see file COPYING for details)

"""The :class:`Plugin` base class.

Each plugin package under :mod:`compat_reason.lib` defines a subclass
named ``Plugin`` whose public class attributes are its settings.  A
:class:`Site <compat_reason.lib.compat.settings.Site>` instantiates them,
and the values can then be changed using :meth:`Plugin.configure`::

    site.plugins.training.configure(alpha=10, regularizer='square')

"""

import logging

from .exceptions import ConfigError

logger = logging.getLogger(__name__)

TRUE_WORDS = ('1', 'yes', 'true', 'on')
FALSE_WORDS = ('0', 'no', 'false', 'off')


class Plugin(object):
    """Base class for the plugins of :mod:`compat_reason.lib`."""

    verbose_name = None

    app_label = None
    """The name of the section in a config file.  Set by
    :class:`Site <compat_reason.lib.compat.settings.Site>`."""

    def __init__(self, app_label=None, **kw):
        if app_label is not None:
            self.app_label = app_label
        self.configure(**kw)

    def __str__(self):
        return "%s plugin" % (self.app_label or self.__class__.__module__)

    @classmethod
    def get_setting_names(cls):
        names = []
        for k in dir(cls):
            if k.startswith('_') or k in ('verbose_name', 'app_label'):
                continue
            v = getattr(cls, k)
            if callable(v) or isinstance(v, (classmethod, staticmethod,
                                             property)):
                continue
            names.append(k)
        return names

    def get_settings(self):
        return dict((k, getattr(self, k)) for k in self.get_setting_names())

    def configure(self, **kw):
        """Set the given settings.  String values are converted to the
        type of the default value."""
        names = self.get_setting_names()
        for k, v in kw.items():
            if k not in names:
                raise ConfigError("%s has no setting %r" % (self, k))
            setattr(self, k, self.coerce(k, v))

    def copy(self, **kw):
        """Return a new instance with the same settings, then apply the
        given changes."""
        p = self.__class__(self.app_label, **self.get_settings())
        p.configure(**kw)
        return p

    def coerce(self, name, value):
        default = getattr(self.__class__, name)
        if not isinstance(value, str) or isinstance(default, str):
            if isinstance(default, tuple) and isinstance(value, list):
                return tuple(value)
            return value
        txt = value.strip()
        try:
            if isinstance(default, bool):
                if txt.lower() in TRUE_WORDS:
                    return True
                if txt.lower() in FALSE_WORDS:
                    return False
                raise ValueError(txt)
            if isinstance(default, int):
                return int(txt)
            if isinstance(default, float):
                return float(txt)
            if isinstance(default, tuple):
                items = [x for x in txt.replace(',', ' ').split() if x]
                if all(isinstance(x, str) for x in default):
                    return tuple(items)
                if all(isinstance(x, int) for x in default):
                    return tuple(int(x) for x in items)
                return tuple(float(x) for x in items)
        except ValueError:
            raise ConfigError(
                "Invalid value %r for setting %s of %s" % (value, name, self))
        if default is None:
            return txt
        raise ConfigError(
            "Cannot convert %r for setting %s of %s" % (value, name, self))
