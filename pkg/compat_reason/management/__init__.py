# -*- coding: UTF-8 -*-
# Copyright 2026 compat-reason contributors
# License: BSD (see file COPYING for details)

"""The command line.

Every subcommand is a Django management command in
:mod:`compat_reason.management.commands`.  Run them through
:xfile:`manage.py` or the ``compat-reason`` script::

    $ compat-reason gen-data --out data
    $ compat-reason train --train data/train.ndjson --out model.ckpt

.. autosummary::
   :toctree:

    base

"""

import os
import sys

SETTINGS_MODULE = 'compat_reason.settings'


def execute_from_command_line(argv=None):
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', SETTINGS_MODULE)
    from django.core.management import execute_from_command_line as run
    run(argv or sys.argv)


def main():
    """Entry point of the ``compat-reason`` console script."""
    execute_from_command_line(sys.argv)
