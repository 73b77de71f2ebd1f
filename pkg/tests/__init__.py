"""
Examples how to run these tests::

  $ pytest
  $ pytest tests/test_autodiff.py
  $ COMPAT_REASON_SLOW=1 pytest tests/test_acceptance.py
"""

import os
from unittest import TestCase

from unipath import Path

import compat_reason

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'compat_reason.settings')


class CodeTests(TestCase):

    project_root = Path(__file__).absolute().parent.parent

    def test_packages(self):
        found = []
        root = self.project_root.child('compat_reason')
        for d in [root] + list(root.walk(filter=lambda p: p.isdir())):
            if d.child('__init__.py').exists():
                found.append('.'.join(
                    d.components()[len(self.project_root.components()):]))
        self.assertEqual(sorted(compat_reason.SETUP_INFO['packages']),
                         sorted(found))

    def test_version(self):
        self.assertEqual(compat_reason.__version__,
                         compat_reason.SETUP_INFO['version'])


def tiny_config(**kw):
    """The dimensions of a small model for fast tests."""
    from compat_reason.lib.compatnet.models import ModelConfig
    d = dict(print_dim=3, material_dim=2, silhouette_dim=2, detail_dim=2,
             intra_hidden=(4, 4), intra_out=2, inter_hidden=(6, 4),
             reason_hidden=(4, 4))
    d.update(kw)
    return ModelConfig(**d)


def random_records(n, seed=0, config=None):
    """`n` records with random features matching `config`, cycling
    through the judgments and reasons."""
    import numpy as np
    from compat_reason.lib.colorfeat.foco import (
        build_color_feature, color_histogram)
    from compat_reason.lib.colorfeat.records import (
        FactorFeatureSet, OutfitRecord)
    from compat_reason.lib.compat.choicelists import JUDGMENTS, REASONS
    config = config or tiny_config()
    dims = config.feature_dims()
    rng = np.random.default_rng(seed)

    def garment():
        kw = dict((f, rng.normal(size=d)) for f, d in dims.items()
                  if f != 'color')
        kw['color'] = build_color_feature(
            color_histogram(rng.random((4, 3)))).values
        return FactorFeatureSet(**kw)

    records = []
    for i in range(n):
        judgment = JUDGMENTS[i % 3]
        reason = None
        if judgment != 'normal':
            reason = REASONS[(i // 3) % 3]
        records.append(OutfitRecord(
            "r%03d" % i, garment(), garment(), judgment, reason,
            dict(color_top='red', color_bottom='blue')))
    return records
