"""Dense (H, W, 3) image tensors.

Images live in numpy arrays of shape (height, width, 3), float64,
channel-minor row-major. Image-valued tensors carry intensities in
[0, 1]; intermediate quantities (smoke estimates, residuals) are
unconstrained reals of the same shape.
"""

import numpy as np


def new_tensor(height, width, fill=0.0):
    """Allocate a constant-filled (height, width, 3) tensor.

    Parameters
    ----------
    height, width : int
        Grid size in pixels. Both must be at least 2, the smallest
        size on which the difference operators are meaningful.
    fill : float
        Value written to every entry.
    """
    if height < 2 or width < 2:
        raise ValueError(
            "tensor needs at least 2 samples per spatial axis, "
            "got %dx%d" % (height, width))
    return np.full((height, width, 3), float(fill), dtype=np.float64)


def dot(a, b):
    """Sum of element-wise products over all entries."""
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    if a.shape != b.shape:
        raise ValueError("shape mismatch: %s vs %s" % (a.shape, b.shape))
    return float(np.sum(a * b))


def clamp01(t):
    """Clip every entry into [0, 1]."""
    return np.clip(t, 0.0, 1.0)


def require_unit_range(t, name="image"):
    # callers pass arbitrary arrays; fail loudly rather than clamp silently
    t = np.asarray(t)
    if t.size and (t.min() < 0.0 or t.max() > 1.0):
        raise ValueError(
            "%s has entries outside [0, 1]; clamp or rescale first" % name)
    return t
