# -*- coding: UTF-8 -*-
# Copyright 2026 compat-reason contributors
# License: BSD (see file COPYING for details)

"""Saving and loading models.

A checkpoint file starts with a text header::

    COMPAT-REASON-CHECKPOINT
    version=1
    color_dim=25
    ...
    n_params=28931

followed by an empty line and then all parameters as little-endian
64-bit floats, in the order of :meth:`ModelConfig.param_shapes
<compat_reason.lib.compatnet.models.ModelConfig.param_shapes>`.

"""

import logging

import numpy as np

from compat_reason.lib.compat.exceptions import CheckpointError, ConfigError

from .models import CompatModel, ModelConfig

logger = logging.getLogger(__name__)

MAGIC = b'COMPAT-REASON-CHECKPOINT'
VERSION = 1


def _format_value(v):
    if isinstance(v, tuple):
        return ",".join(str(i) for i in v)
    if isinstance(v, bool):
        return "1" if v else "0"
    return str(v)


def _parse_value(name, text):
    default = getattr(ModelConfig(), name)
    if isinstance(default, tuple):
        return tuple(int(t) for t in text.split(',') if t)
    if isinstance(default, bool):
        return text == "1"
    return int(text)


def checkpoint_bytes(model):
    lines = [MAGIC, b'version=%d' % VERSION]
    for k in ModelConfig.FIELDS:
        lines.append(("%s=%s" % (
            k, _format_value(getattr(model.config, k)))).encode('ascii'))
    lines.append(b'n_params=%d' % model.config.n_params())
    header = b'\n'.join(lines) + b'\n\n'
    body = b''.join(
        np.ascontiguousarray(p, dtype='<f8').tobytes() for p in model.params)
    return header + body


def save_checkpoint(model, filename):
    data = checkpoint_bytes(model)
    with open(filename, 'wb') as fd:
        fd.write(data)
    logger.info("Saved %d parameters to %s", model.config.n_params(),
                filename)


def parse_checkpoint(data, filename=None, config=None):
    """Return the model stored in `data` (bytes).  If `config` is given,
    the stored model must have these dimensions."""
    where = filename or "checkpoint"
    end = data.find(b'\n\n')
    if end < 0:
        raise CheckpointError("%s: truncated header" % where)
    lines = data[:end].split(b'\n')
    if lines[0] != MAGIC:
        raise CheckpointError("%s: not a checkpoint file" % where)
    values = dict()
    for line in lines[1:]:
        k, sep, v = line.decode('ascii', 'replace').partition('=')
        if not sep:
            raise CheckpointError("%s: invalid header line %r" % (
                where, line))
        values[k] = v
    try:
        version = int(values.pop('version'))
    except (KeyError, ValueError):
        raise CheckpointError("%s: missing format version" % where)
    if version != VERSION:
        raise CheckpointError("%s: format version %d is not supported" % (
            where, version))
    unknown = set(values) - set(ModelConfig.FIELDS) - set(["n_params"])
    if unknown:
        raise CheckpointError("%s: unknown header keys %s" % (
            where, ", ".join(sorted(unknown))))
    for k in ModelConfig.FIELDS + ('n_params',):
        if k not in values:
            raise CheckpointError("%s: missing header key %s" % (where, k))
    try:
        n_params = int(values.pop("n_params"))
        kw = dict((k, _parse_value(k, v)) for k, v in values.items())
        stored = ModelConfig(**kw)
    except (KeyError, ValueError, ConfigError) as e:
        raise CheckpointError("%s: invalid header (%s)" % (where, e))
    if n_params != stored.n_params():
        raise CheckpointError(
            "%s: header announces %d parameters, the dimensions need %d"
            % (where, n_params, stored.n_params()))
    if config is not None and config != stored:
        raise CheckpointError(
            "%s: model dimensions %r differ from expected %r" % (
                where, stored, config))
    body = data[end + 2:]
    if len(body) != 8 * n_params:
        raise CheckpointError(
            "%s: %d bytes of parameters, expected %d" % (
                where, len(body), 8 * n_params))
    flat = np.frombuffer(body, dtype='<f8').astype(np.float64)
    params = []
    offset = 0
    for shape in stored.param_shapes():
        size = int(np.prod(shape))
        params.append(flat[offset:offset + size].reshape(shape))
        offset += size
    return CompatModel(stored, params)


def load_checkpoint(filename, config=None):
    with open(filename, 'rb') as fd:
        data = fd.read()
    model = parse_checkpoint(data, filename, config)
    logger.info("Loaded model from %s", filename)
    return model
