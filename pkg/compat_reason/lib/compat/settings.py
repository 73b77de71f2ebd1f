# -*- coding: UTF-8 -*-
# Copyright 2026 compat-reason contributors
# License: BSD (see file COPYING for details)

"""The :class:`Site` object which holds the configuration of a run.

A config file is an INI file with one section per plugin::

    [training]
    alpha = 1
    regularizer = ce
    epochs = 20

    [synthdata]
    n_train = 5000

Unknown sections and unknown keys are rejected before any work begins.

"""

import configparser
import logging
import os
from importlib import import_module

from .exceptions import ConfigError

logger = logging.getLogger(__name__)


class Plugins(dict):
    """A dict whose items are also reachable as attributes."""

    def __getattr__(self, name):
        try:
            return self[name]
        except KeyError:
            raise AttributeError(name)


class Site(object):
    """The configuration of one invocation of :mod:`compat_reason`.

    .. attribute:: plugins

        A :class:`Plugins` dict mapping each app label to the
        :class:`Plugin <compat_reason.lib.compat.plugin.Plugin>` instance
        of the corresponding plugin package.

    """

    verbose_name = "compat-reason"

    def get_installed_plugins(self):
        yield 'compat_reason.lib.autodiff'
        yield 'compat_reason.lib.colorfeat'
        yield 'compat_reason.lib.compatnet'
        yield 'compat_reason.lib.reasoning'
        yield 'compat_reason.lib.synthdata'
        yield 'compat_reason.lib.training'
        yield 'compat_reason.lib.evalharness'
        yield 'compat_reason.lib.explain'

    def __init__(self, config_file=None, **sections):
        self.plugins = Plugins()
        for name in self.get_installed_plugins():
            app_label = name.rsplit('.', 1)[-1]
            m = import_module(name)
            self.plugins[app_label] = m.Plugin(app_label)
        if config_file is not None:
            self.load_config(config_file)
        for app_label, kw in sections.items():
            self.configure_plugin(app_label, **kw)

    def configure_plugin(self, app_label, **kw):
        try:
            p = self.plugins[app_label]
        except KeyError:
            raise ConfigError("No plugin named %r" % (app_label,))
        p.configure(**kw)

    def load_config(self, filename):
        """Read the settings from the given INI file."""
        if not os.path.isfile(filename):
            raise ConfigError("Config file %s does not exist" % filename)
        parser = configparser.ConfigParser(interpolation=None)
        parser.optionxform = str
        try:
            with open(filename) as fd:
                parser.read_file(fd)
        except configparser.Error as e:
            raise ConfigError("%s: %s" % (filename, e))
        for section in parser.sections():
            if section not in self.plugins:
                raise ConfigError(
                    "%s: unknown section [%s]" % (filename, section))
            self.configure_plugin(section, **dict(parser.items(section)))
        logger.info("Loaded settings from %s", filename)

    def get_settings(self):
        return dict((k, p.get_settings()) for k, p in self.plugins.items())

    def model_config(self):
        """Return the :class:`ModelConfig
        <compat_reason.lib.compatnet.models.ModelConfig>` defined by the
        feature dimensions and network sizes of this site."""
        from compat_reason.lib.compatnet.models import ModelConfig
        return ModelConfig.from_site(self)
