# -*- coding: UTF-8 -*-
# Copyright 2026 compat-reason contributors
# License: BSD (see file COPYING for details)

"""Reading the pixels of garment images.

Any format Pillow can open is accepted (PNG, JPEG, PPM, ...).  Images
with an alpha channel or a palette are converted to plain RGB first.

"""

import io
import logging

import numpy as np
from PIL import Image

from compat_reason.lib.compat.exceptions import FeatureFileError

logger = logging.getLogger(__name__)


def image_pixels(image):
    """Return the pixels of a :class:`PIL.Image.Image` as an array of
    shape (height * width, 3) with values in [0, 1]."""
    rgb = np.asarray(image.convert('RGB'), dtype=np.float64)
    return rgb.reshape(-1, 3) / 255.0


def _open(source, filename):
    try:
        with Image.open(source) as image:
            image.load()
            return image_pixels(image)
    except (OSError, ValueError, SyntaxError,
            Image.DecompressionBombError) as e:
        raise FeatureFileError("Cannot read image (%s)" % e, filename)


def parse_image(data, filename=None):
    """Return the pixels of an image given as bytes."""
    return _open(io.BytesIO(data), filename)


def read_pixel_file(filename):
    """Read an image file and return its pixels as :func:`image_pixels`
    does."""
    pixels = _open(filename, filename)
    logger.info("Read %d pixels from %s", len(pixels), filename)
    return pixels
