# -*- coding: UTF-8 -*-
# Copyright 2026 compat-reason contributors
# License: BSD (see file COPYING for details)

"""The application plugin.  Defines what all other plugins share: the
configuration machinery, the vocabularies and the exceptions.

.. autosummary::
   :toctree:

    plugin
    settings
    choicelists
    exceptions

"""
