# -*- coding: UTF-8 -*-
# Copyright 2026 compat-reason contributors
# License: BSD (see file COPYING for details)

"""The plugins of :mod:`compat_reason`.

.. autosummary::
   :toctree:

    compat
    autodiff
    colorfeat
    compatnet
    reasoning
    synthdata
    training
    evalharness
    explain

"""
