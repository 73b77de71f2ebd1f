# -*- coding: UTF-8 -*-
# Copyright 2026 compat-reason contributors
# License: BSD (see file COPYING for details)

"""The base class of the management commands."""

import logging
import os
import sys

from django.core.management.base import BaseCommand

from compat_reason.lib.compat.exceptions import CompatReasonError, ConfigError
from compat_reason.lib.compat.settings import Site

VERBOSITY_LEVELS = {
    0: logging.ERROR,
    1: logging.WARNING,
    2: logging.INFO,
    3: logging.DEBUG,
}


class SiteCommand(BaseCommand):
    """A command working on a :class:`Site
    <compat_reason.lib.compat.settings.Site>` built from the
    ``--config`` file and the option overrides.

    Any :class:`CompatReasonError
    <compat_reason.lib.compat.exceptions.CompatReasonError>` or
    :exc:`OSError` ends the command with exit code 2 and one line
    ``error: <class>: <message>`` on stderr.

    """

    requires_system_checks = []

    overrides = {
        'seed': ('training', 'synthdata'),
        'alpha': ('training',),
        'reg': ('training',),
        'epochs': ('training',),
    }
    """Maps an option to the plugins whose setting of the same meaning it
    overrides."""

    setting_names = {'reg': 'regularizer'}

    def add_arguments(self, parser):
        parser.add_argument(
            '--config', help="INI file with plugin settings")
        parser.add_argument(
            '--seed', type=int, help="Seed of the data and the training")

    def add_training_arguments(self, parser):
        parser.add_argument(
            '--alpha', type=float, help="Weight of the reason regularizer")
        parser.add_argument(
            '--reg', choices=('ce', 'linear', 'square'),
            help="The reason regularizer")
        parser.add_argument(
            '--epochs', type=int, help="Number of training epochs")

    def run_from_argv(self, argv):
        try:
            super(SiteCommand, self).run_from_argv(argv)
        except (CompatReasonError, OSError) as e:
            self.stderr.write("error: %s: %s" % (e.__class__.__name__, e))
            sys.exit(2)

    def execute(self, *args, **options):
        level = VERBOSITY_LEVELS.get(options.get('verbosity', 1),
                                     logging.DEBUG)
        logging.getLogger('compat_reason').setLevel(level)
        return super(SiteCommand, self).execute(*args, **options)

    def get_site(self, options):
        config = options.get('config')
        if config:
            self.check_file(config)
        site = Site(config_file=config)
        for opt, labels in self.overrides.items():
            v = options.get(opt)
            if v is None:
                continue
            name = self.setting_names.get(opt, opt)
            for label in labels:
                site.configure_plugin(label, **{name: v})
        return site

    def check_file(self, filename):
        if not os.path.isfile(filename):
            raise ConfigError("File %s does not exist" % filename)
        return filename

    def check_dir(self, dirname):
        if not os.path.isdir(dirname):
            raise ConfigError("Directory %s does not exist" % dirname)
        return dirname

    def check_output(self, filename):
        """Make sure that the directory of an output file exists."""
        d = os.path.dirname(os.path.abspath(filename))
        if not os.path.isdir(d):
            raise ConfigError("Directory %s does not exist" % d)
        return filename
