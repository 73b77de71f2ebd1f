# -*- coding: UTF-8 -*-
# Copyright 2026 compat-reason contributors
# License: BSD (see file COPYING for details)

import hashlib
import shutil
import tempfile
from unittest import TestCase

import numpy as np
from unipath import Path

from compat_reason.lib.compat.exceptions import (
    CheckpointError, ConfigError, DatasetError)
from compat_reason.lib.compatnet.checkpoint import (
    checkpoint_bytes, parse_checkpoint, save_checkpoint, load_checkpoint)
from compat_reason.lib.compatnet.models import (
    CompatModel, ModelConfig, init_model, forward, forward_batch,
    outfit_score, rank_outfits, predict_judgment)

from tests import tiny_config, random_records


class ModelConfigTests(TestCase):

    def test_defaults(self):
        c = ModelConfig()
        self.assertEqual(c.x_dim, 160)
        self.assertEqual(c.feature_dims()['color'], 25)
        self.assertEqual(c.reason_ranges(), dict(
            color=(0, 32), print=(32, 64), design=(64, 160)))

    def test_partition(self):
        c = tiny_config()
        part = c.partition()
        all_idx = np.concatenate([part[r] for r in part])
        self.assertEqual(sorted(all_idx), list(range(c.x_dim)))
        self.assertEqual(list(part['design']), list(range(4, 10)))

    def test_n_params(self):
        c = tiny_config()
        m = init_model(c, 0)
        self.assertEqual(sum(p.size for p in m.params), c.n_params())
        # color net: 50 -> 4 -> 4 -> 2
        self.assertEqual(c.param_shapes()[:2], [(50, 4), (4,)])

    def test_invalid(self):
        self.assertRaises(ConfigError, ModelConfig, intra_out=0)
        self.assertRaises(ConfigError, ModelConfig, inter_hidden=(4,))
        c = tiny_config()
        self.assertRaises(ConfigError, CompatModel, c, [np.zeros(3)])

    def test_equality(self):
        self.assertEqual(tiny_config(), tiny_config())
        self.assertNotEqual(tiny_config(), tiny_config(intra_out=3))
        self.assertEqual(tiny_config().replace(intra_out=3),
                         tiny_config(intra_out=3))


class ForwardTests(TestCase):

    def setUp(self):
        self.model = init_model(tiny_config(), 1)
        self.records = random_records(7, seed=2)

    def test_init_deterministic(self):
        a = init_model(tiny_config(), 5)
        b = init_model(tiny_config(), 5)
        c = init_model(tiny_config(), 6)
        self.assertEqual(checkpoint_bytes(a), checkpoint_bytes(b))
        self.assertNotEqual(checkpoint_bytes(a), checkpoint_bytes(c))
        w = a.params[0]
        self.assertLessEqual(np.max(np.abs(w)), 1 / np.sqrt(w.shape[0]))

    def test_single_outfit(self):
        fp = forward(self.model, self.records[0])
        self.assertEqual(fp.x.shape, (10,))
        self.assertEqual(fp.y.shape, (3,))
        self.assertIsNone(fp.reason_logits)

    def test_numpy_forward(self):
        r = self.records[3]
        fp = forward(self.model, r)
        x, y = self.model.forward_numpy(
            [r.top[f] for f in ('color', 'print', 'material', 'silhouette',
                                'detail')],
            [r.bottom[f] for f in ('color', 'print', 'material',
                                   'silhouette', 'detail')])
        self.assertTrue(np.allclose(fp.x.value, x, rtol=0, atol=1e-12))
        self.assertTrue(np.allclose(fp.y.value, y, rtol=0, atol=1e-12))

    def test_batch_matches_single(self):
        fp = forward_batch(self.model, self.records)
        self.assertEqual(fp.y.shape, (7, 3))
        for i, r in enumerate(self.records):
            single = forward(self.model, r)
            self.assertTrue(np.allclose(fp.y.value[i], single.y.value,
                                        rtol=0, atol=1e-12))

    def test_wrong_dims(self):
        other = random_records(1, config=tiny_config(print_dim=4))
        self.assertRaises(DatasetError, forward, self.model, other[0])

    def test_reason_head(self):
        m = init_model(tiny_config(), 1, reason_head=True)
        fp = forward(m, self.records[0])
        self.assertEqual(fp.reason_logits.shape, (3,))
        self.assertEqual(m.config.n_params(), tiny_config().n_params() + (
            10 * 4 + 4 + 4 * 4 + 4 + 4 * 3 + 3))

    def test_score_and_rank(self):
        self.assertEqual(outfit_score(np.zeros(3)), 0.0)
        self.assertGreater(outfit_score([3.0, 0.0, -3.0]), 0.9)
        ranked = rank_outfits(self.model, self.records)
        scores = [s for s, r in ranked]
        self.assertEqual(scores, sorted(scores, reverse=True))
        self.assertEqual(len(ranked), 7)
        self.assertEqual(predict_judgment([0.0, 1.0, 0.5]), 'normal')


class CheckpointTests(TestCase):

    def setUp(self):
        self.tmp = Path(tempfile.mkdtemp())
        self.model = init_model(tiny_config(), 4)

    def tearDown(self):
        shutil.rmtree(self.tmp)

    def test_round_trip(self):
        fn = self.tmp.child('m.ckpt')
        save_checkpoint(self.model, fn)
        loaded = load_checkpoint(fn)
        self.assertEqual(loaded.config, self.model.config)
        for a, b in zip(loaded.params, self.model.params):
            self.assertEqual(a.tobytes(), b.tobytes())
        self.assertEqual(
            hashlib.sha256(fn.read_file('rb')).hexdigest(),
            hashlib.sha256(checkpoint_bytes(loaded)).hexdigest())

    def test_reason_head_round_trip(self):
        m = init_model(tiny_config(), 4, reason_head=True)
        loaded = parse_checkpoint(checkpoint_bytes(m))
        self.assertIsNotNone(loaded.reason_head)

    def test_header(self):
        data = checkpoint_bytes(self.model)
        header = data[:data.index(b'\n\n')].decode('ascii').split('\n')
        self.assertEqual(header[0], 'COMPAT-REASON-CHECKPOINT')
        self.assertEqual(header[1], 'version=1')
        self.assertIn('intra_hidden=4,4', header)
        self.assertIn('n_params=%d' % self.model.config.n_params(), header)

    def test_corrupt(self):
        data = checkpoint_bytes(self.model)
        self.assertRaises(CheckpointError, parse_checkpoint, b'X' + data)
        self.assertRaises(CheckpointError, parse_checkpoint, data[:-8])
        self.assertRaises(CheckpointError, parse_checkpoint, data[:20])
        self.assertRaises(CheckpointError, parse_checkpoint,
                          data.replace(b'version=1', b'version=2'))
        self.assertRaises(CheckpointError, parse_checkpoint,
                          data.replace(b'version=1', b'version=1\nfoo=2'))
        self.assertRaises(CheckpointError, parse_checkpoint,
                          data.replace(b'intra_out=2', b'intra_out=3'))

    def test_missing_key(self):
        data = checkpoint_bytes(self.model)
        end = data.index(b'\n\n')
        lines = data[:end].split(b'\n')
        for i in range(2, len(lines)):
            key = lines[i].split(b'=')[0].decode('ascii')
            broken = b'\n'.join(lines[:i] + lines[i + 1:]) + data[end:]
            with self.assertRaises(CheckpointError) as cm:
                parse_checkpoint(broken, 'm.ckpt')
            self.assertEqual(str(cm.exception),
                             "m.ckpt: missing header key %s" % key)

    def test_expected_config(self):
        data = checkpoint_bytes(self.model)
        parse_checkpoint(data, config=tiny_config())
        self.assertRaises(CheckpointError, parse_checkpoint, data,
                          config=tiny_config(intra_out=3))
