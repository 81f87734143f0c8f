"""8-bit RGB image files in and out of float tensors.

PNG goes through Pillow; PPM (P6, maxval 255) is parsed and written
natively so interchange files stay dependency-light and byte-stable.
Loading maps bytes to [0, 1] by x/255; saving quantizes with half-up
rounding, fixed here so independent implementations agree bit-exactly.
"""

import warnings

import numpy as np
from PIL import Image, UnidentifiedImageError

from .tensor import require_unit_range

_PPM_SUFFIXES = (".ppm", ".pnm")


def _read_ppm(path):
    with open(path, "rb") as fh:
        blob = fh.read()
    # header: magic, width, height, maxval as whitespace-separated
    # tokens, comments allowed; a single whitespace byte ends the header
    tokens = []
    pos = 0
    while len(tokens) < 4:
        if pos >= len(blob):
            raise OSError("%s: truncated PPM header" % path)
        ch = blob[pos:pos + 1]
        if ch.isspace():
            pos += 1
        elif ch == b"#":
            pos = blob.find(b"\n", pos)
            if pos < 0:
                raise OSError("%s: truncated PPM comment" % path)
        else:
            end = pos
            while end < len(blob) and not blob[end:end + 1].isspace():
                end += 1
            tokens.append(blob[pos:end])
            pos = end
    if tokens[0] != b"P6":
        raise OSError("%s: not a binary PPM (P6) file" % path)
    try:
        width, height, maxval = (int(t) for t in tokens[1:])
    except ValueError:
        raise OSError("%s: malformed PPM header" % path) from None
    if maxval != 255:
        raise OSError("%s: only 8-bit PPM supported, maxval=%d" % (path, maxval))
    pos += 1
    data = blob[pos:pos + width * height * 3]
    if len(data) != width * height * 3:
        raise OSError("%s: truncated PPM pixel data" % path)
    return np.frombuffer(data, dtype=np.uint8).reshape(height, width, 3)


def _read_with_pillow(path):
    try:
        img = Image.open(path)
        img.load()
    except UnidentifiedImageError:
        raise OSError("%s: cannot decode image" % path) from None
    if img.mode in ("I", "I;16", "I;16B", "I;16L", "F"):
        raise OSError("%s: only 8-bit images supported, mode=%s"
                      % (path, img.mode))
    if img.mode in ("RGBA", "LA", "PA"):
        warnings.warn("%s: alpha channel stripped" % path, stacklevel=3)
        img = img.convert("RGBA").convert("RGB")
    arr = np.asarray(img.convert("RGB") if img.mode != "RGB" else img)
    return arr


def load_image(path):
    """Decode an 8-bit PNG or PPM file to a float tensor in [0, 1].

    Grayscale inputs are replicated across the three channels; alpha
    is dropped with a warning. Raises OSError for missing files,
    undecodable data, or unsupported bit depths.
    """
    path = str(path)
    if path.lower().endswith(_PPM_SUFFIXES):
        arr = _read_ppm(path)
    else:
        arr = _read_with_pillow(path)
    return arr.astype(np.float64) / 255.0


def save_image(t, path):
    """Write a clamped tensor as an 8-bit PNG or PPM file.

    Quantization is floor(x*255 + 0.5), i.e. ties round up.
    """
    t = require_unit_range(np.asarray(t, dtype=np.float64))
    data = np.floor(t * 255.0 + 0.5).astype(np.uint8)
    path = str(path)
    if path.lower().endswith(_PPM_SUFFIXES):
        header = b"P6\n%d %d\n255\n" % (data.shape[1], data.shape[0])
        with open(path, "wb") as fh:
            fh.write(header)
            fh.write(data.tobytes())
    else:
        Image.fromarray(data, mode="RGB").save(path, format="PNG")
