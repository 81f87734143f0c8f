"""End-to-end desmoking: solve for the layer, weigh it out, clamp.

The enhanced image is the input minus the smoke layer scaled by its
per-channel mean intensity. Keeping the weights per channel preserves
the near-neutral color of surgical smoke without tinting the scene.
"""

from dataclasses import dataclass

import numpy as np

from .solver import SolveDiagnostics, estimate_smoke
from .tensor import clamp01, require_unit_range


@dataclass
class DecompositionResult:
    """One desmoking run: layer, enhanced image, weights, diagnostics.

    enhanced is clamped to [0,1]; the pre-clamp identity
    image == (image - alpha * smoke) + alpha * smoke holds exactly.
    """

    smoke: np.ndarray
    enhanced: np.ndarray
    alpha: tuple
    diag: SolveDiagnostics


def channel_means(t):
    """Mean intensity of each channel as a tuple of three floats."""
    m = np.asarray(t).mean(axis=(0, 1))
    return (float(m[0]), float(m[1]), float(m[2]))


def remove_smoke(image, params=None, kernel=None):
    """Decompose a smoked image into smoke layer and enhanced image.

    Parameters mirror estimate_smoke; the optional kernel allows batch
    callers to reuse the spectral denominator across frames.
    """
    image = require_unit_range(np.asarray(image, dtype=np.float64))
    smoke, diag = estimate_smoke(image, params, kernel)
    alpha = channel_means(smoke)
    enhanced = clamp01(image - np.asarray(alpha) * smoke)
    return DecompositionResult(smoke, enhanced, alpha, diag)
