"""Periodic forward differences and the weighted gradient stack.

A gradient stack is an ndarray of shape (3, H, W, 3). The leading
index selects the difference direction, ordered x (along width),
y (along height), c (across channels). Boundaries wrap on every axis,
including the length-3 channel axis; the Fourier-domain solve in the
spectral module is exact only for these circulant operators.
"""

from dataclasses import dataclass

import numpy as np

_AXES = {"x": 1, "y": 0, "c": 2}


@dataclass(frozen=True)
class GradWeights:
    """Per-direction weights of the stacked difference operator."""

    x: float = 1.0
    y: float = 1.0
    c: float = 1.0

    def __post_init__(self):
        if min(self.x, self.y, self.c) < 0:
            raise ValueError("direction weights must be nonnegative")
        if self.x == 0 and self.y == 0 and self.c == 0:
            raise ValueError("at least one direction weight must be positive")


def _axis_number(axis):
    try:
        return _AXES[axis]
    except KeyError:
        raise ValueError("axis must be 'x', 'y' or 'c', got %r" % (axis,)) from None


def forward_diff(t, axis):
    """Periodic forward difference: next sample minus current one."""
    return np.roll(t, -1, axis=_axis_number(axis)) - t


def adjoint_diff(t, axis):
    """Adjoint of forward_diff, i.e. the negated backward difference."""
    return np.roll(t, 1, axis=_axis_number(axis)) - t


def weighted_gradient(t, weights):
    """Stack the three weighted forward differences of a tensor.

    Returns an array of shape (3,) + t.shape with direction blocks
    (x, y, c) scaled by the corresponding weight.
    """
    return np.stack([
        weights.x * forward_diff(t, "x"),
        weights.y * forward_diff(t, "y"),
        weights.c * forward_diff(t, "c"),
    ])


def weighted_gradient_adjoint(g, weights):
    """Map a gradient stack back to tensor shape, adjoint to weighted_gradient."""
    return (weights.x * adjoint_diff(g[0], "x")
            + weights.y * adjoint_diff(g[1], "y")
            + weights.c * adjoint_diff(g[2], "c"))
