# -*- coding: UTF-8 -*-
# Copyright 2026 compat-reason contributors
# License: BSD (see file COPYING for details)

"""Explaining the prediction of a model for one outfit."""

import logging

import numpy as np

from compat_reason.lib.colorfeat.foco import ColorFeature
from compat_reason.lib.colorfeat.palette import major_color_name
from compat_reason.lib.compat.choicelists import (
    JUDGMENTS, REASONS, GOOD, BAD)
from compat_reason.lib.compatnet.models import forward
from compat_reason.lib.reasoning.contributions import (
    formulation_score, predict_reason)

from .templates import generate_explanation

logger = logging.getLogger(__name__)

TABLE_ROWS = ('C', 'G', 'B')


def record_attributes(record):
    """The attributes of a record.  Missing color attributes are named
    after the major color of the garment's color feature."""
    attrs = dict(record.attributes)
    for garment in ('top', 'bottom'):
        key = 'color_' + garment
        if key not in attrs:
            name = major_color_name(
                ColorFeature(getattr(record, garment)['color']))
            if name is not None:
                attrs[key] = name
    return attrs


def contribution_table(model, record, fp=None):
    """Return the per-reason contribution rows of one outfit as a dict:

    - ``C``: mean contribution of each reason to the predicted judgment
    - ``G``: positive contribution to good minus that to normal
    - ``B``: positive contribution to bad minus that to normal

    Each row is a numpy array in the order color, print, design.
    """
    if fp is None:
        fp = forward(model, record)
    ranges = model.config.reason_ranges()
    j = int(np.argmax(fp.y.value))
    return dict(
        C=np.array(formulation_score(fp.x, fp.y, j, 'F1', ranges).value),
        G=np.array(formulation_score(fp.x, fp.y, GOOD, 'F6', ranges).value),
        B=np.array(formulation_score(fp.x, fp.y, BAD, 'F6', ranges).value))


def format_contribution_table(table):
    """Return the table as lines of text."""
    lines = ["   " + "".join("%10s" % r for r in REASONS)]
    for row in TABLE_ROWS:
        lines.append("%-3s" % row + "".join("%10.3f" % v for v in table[row]))
    return lines


class Explanation(object):

    def __init__(self, outfit_id, judgment, reason, sentence, table):
        self.outfit_id = outfit_id
        self.judgment = judgment
        self.reason = reason
        self.sentence = sentence
        self.table = table

    def as_dict(self):
        return dict(
            outfit_id=self.outfit_id, judgment=self.judgment,
            reason=self.reason, sentence=self.sentence,
            contributions=dict((k, v.tolist()) for k, v in self.table.items()))


def explain_record(model, record, templates=None):
    """Predict the judgment and reason of `record` and explain them."""
    fp = forward(model, record)
    judgment = JUDGMENTS[int(np.argmax(fp.y.value))]
    reason = predict_reason(model, fp.x, fp.y)
    sentence = generate_explanation(
        judgment, reason, record_attributes(record), templates)
    table = contribution_table(model, record, fp)
    logger.debug("%s: %s", record.outfit_id, sentence)
    return Explanation(record.outfit_id, judgment, reason, sentence, table)
