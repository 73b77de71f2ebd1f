# -*- coding: UTF-8 -*-
# Copyright 2026 compat-reason contributors
# License: BSD (see file COPYING for details)

"""The template table and sentence generation.

>>> generate_explanation('bad', 'print',
...     dict(print_top='floral', print_bottom='floral'))
'This outfit is bad. The floral print top and the floral bottom make the outfit too dazzling.'

"""

import logging
import os
import string

from compat_reason.lib.compat.choicelists import (
    FACTORS, JUDGMENTS, REASONS, has_reason)
from compat_reason.lib.compat.exceptions import ExplanationError

logger = logging.getLogger(__name__)

DEFAULT_TEMPLATES = os.path.join(
    os.path.dirname(__file__), 'config', 'templates.txt')

PLACEHOLDERS = tuple(
    "%s_%s" % (f, g) for f in FACTORS for g in ('t', 'b'))


def leaf_keys():
    """The keys of all leaves of the decision tree."""
    for j in JUDGMENTS:
        if has_reason(j):
            for r in REASONS:
                yield "%s.%s" % (j, r)
        else:
            yield j


def placeholders_of(template):
    return [name for _, name, _, _ in string.Formatter().parse(template)
            if name is not None]


class TemplateTable(object):
    """Maps every leaf key (``good.color``, ..., ``normal``) to a
    template."""

    def __init__(self, templates):
        self.templates = dict(templates)
        missing = [k for k in leaf_keys() if k not in self.templates]
        if missing:
            raise ExplanationError("No template for %s" % ", ".join(missing))
        unknown = set(self.templates) - set(leaf_keys())
        if unknown:
            raise ExplanationError("Unknown template keys %s" % ", ".join(
                sorted(unknown)))
        for k, t in self.templates.items():
            for name in placeholders_of(t):
                if name not in PLACEHOLDERS:
                    raise ExplanationError(
                        "Template %s uses unknown placeholder {%s}" % (
                            k, name))

    @classmethod
    def parse(cls, lines, filename=None):
        templates = dict()
        for lineno, line in enumerate(lines, 1):
            line = line.strip()
            if not line or line.startswith('#'):
                continue
            key, sep, text = line.partition(':')
            key = key.strip()
            if not sep or not key:
                raise ExplanationError("%s:%d: expected 'key: template'" % (
                    filename, lineno))
            if key in templates:
                raise ExplanationError("%s:%d: duplicate template %s" % (
                    filename, lineno, key))
            templates[key] = text.strip()
        return cls(templates)

    def get_template(self, judgment, reason):
        if judgment not in JUDGMENTS:
            raise ExplanationError("Unknown judgment %r" % (judgment,))
        if has_reason(judgment):
            if reason not in REASONS:
                raise ExplanationError(
                    "A %s judgment needs a reason, got %r" % (
                        judgment, reason))
            return self.templates["%s.%s" % (judgment, reason)]
        if reason is not None:
            raise ExplanationError(
                "A normal judgment has no reason, got %r" % (reason,))
        return self.templates[judgment]


_default = dict()


def load_templates(filename=None):
    """Read a template file.  The default file is read only once."""
    if filename is None:
        if 'table' not in _default:
            _default['table'] = load_templates(DEFAULT_TEMPLATES)
        return _default['table']
    with open(filename) as fd:
        table = TemplateTable.parse(fd, filename)
    logger.debug("Loaded templates from %s", filename)
    return table


def placeholder_values(attributes):
    """Map the placeholders to the attributes they stand for (e.g.
    ``print_t`` to ``attributes['print_top']``).  Attributes which are
    not given are left out."""
    values = dict()
    for f in FACTORS:
        for g, garment in (('t', 'top'), ('b', 'bottom')):
            key = "%s_%s" % (f, garment)
            if key in attributes:
                values["%s_%s" % (f, g)] = attributes[key]
    return values


def generate_explanation(judgment, reason, attributes, table=None):
    """Return the explanation sentence of a judgment and its reason."""
    if table is None:
        table = load_templates()
    template = table.get_template(judgment, reason)
    values = placeholder_values(attributes)
    for name in placeholders_of(template):
        if name not in values:
            f, g = name.rsplit('_', 1)
            raise ExplanationError("Missing attribute %s_%s" % (
                f, 'top' if g == 't' else 'bottom'))
    return "This outfit is %s. %s" % (judgment, template.format(**values))
