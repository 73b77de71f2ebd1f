# -*- coding: UTF-8 -*-
# Copyright 2026 compat-reason contributors
# License: BSD (see file COPYING for details)


"""Explaining a judgment in one or two sentences.

The explanation follows a fixed decision tree: the judgment selects a
branch, the reason selects a leaf, and each leaf holds a sentence
template which mentions only the attributes of the decisive factor.
The templates are read from a text file (by default
:file:`config/templates.txt` in this package), so their wording can
change without touching the code.

.. autosummary::
   :toctree:

    templates
    explainer

"""

from compat_reason.lib.compat.plugin import Plugin as BasePlugin


class Plugin(BasePlugin):
    "See :class:`compat_reason.lib.compat.plugin.Plugin`."

    verbose_name = "Explanations"

    templates_file = None
    """Path of a template file to use instead of the default one."""

    def get_templates(self):
        from .templates import load_templates
        return load_templates(self.templates_file)
