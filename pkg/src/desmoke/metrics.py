"""Evaluation metrics: restored edges, PSNR, RMS contrast.

The restored-edges score counts pixels whose local contrast clears a
visibility threshold before and after enhancement and reports the
relative gain. Visibility uses Michelson contrast of the mean-of-RGB
luminance against in-grid 4-neighbors; 5 percent is the customary
visibility threshold. The estimator is an approximation: scores are
comparable between methods run through this module, not against
published tables. Perceptual fog-density and sharpness scores (FADE,
JNBM) depend on externally trained models and are deliberately not
implemented.
"""

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np


@dataclass
class MetricReport:
    """Scores of one original/enhanced pair.

    psnr is present only when ground truth was supplied; math.inf
    encodes an exact match.
    """

    re: float
    psnr: Optional[float]
    rms_contrast_in: float
    rms_contrast_out: float

    def as_dict(self):
        p = self.psnr
        if p is not None and math.isinf(p):
            p = "identical"
        return {
            "re": self.re,
            "psnr": p,
            "rms_contrast_in": self.rms_contrast_in,
            "rms_contrast_out": self.rms_contrast_out,
        }


def _luminance(t):
    return np.asarray(t).mean(axis=2)


def _pair_contrast(a, b):
    s = a + b
    d = np.abs(a - b)
    out = np.zeros_like(a)
    np.divide(d, s, out=out, where=s > 0)
    return out


def visible_edges(t, contrast_threshold=0.05):
    """Mask of pixels with a visibly contrasting 4-neighbor.

    A pixel is marked when the Michelson contrast |a-b|/(a+b) of its
    luminance against at least one in-grid neighbor exceeds the
    threshold. Borders see only their existing neighbors; zero-sum
    pairs count as zero contrast.
    """
    if not 0.0 < contrast_threshold < 1.0:
        raise ValueError("contrast threshold must lie in (0, 1)")
    luma = _luminance(t)
    mask = np.zeros(luma.shape, dtype=bool)
    horiz = _pair_contrast(luma[:, :-1], luma[:, 1:]) > contrast_threshold
    mask[:, :-1] |= horiz
    mask[:, 1:] |= horiz
    vert = _pair_contrast(luma[:-1, :], luma[1:, :]) > contrast_threshold
    mask[:-1, :] |= vert
    mask[1:, :] |= vert
    return mask


def restored_edges(original, enhanced, contrast_threshold=0.05):
    """Relative change in visible-edge count from original to enhanced.

    (n_enhanced - n_original) / max(n_original, 1); positive values
    mean the enhancement exposed edges that smoke had hidden.
    """
    original = np.asarray(original)
    enhanced = np.asarray(enhanced)
    if original.shape != enhanced.shape:
        raise ValueError("shape mismatch: %s vs %s"
                         % (original.shape, enhanced.shape))
    n_in = int(np.count_nonzero(visible_edges(original, contrast_threshold)))
    n_out = int(np.count_nonzero(visible_edges(enhanced, contrast_threshold)))
    return (n_out - n_in) / max(n_in, 1)


def psnr(a, b):
    """Peak signal-to-noise ratio in dB at peak 1.0; inf for identical."""
    a = np.asarray(a)
    b = np.asarray(b)
    if a.shape != b.shape:
        raise ValueError("shape mismatch: %s vs %s" % (a.shape, b.shape))
    mse = float(np.mean((a - b) ** 2))
    if mse == 0.0:
        return math.inf
    return 10.0 * math.log10(1.0 / mse)


def rms_contrast(t):
    """Standard deviation of the luminance channel."""
    return float(np.std(_luminance(t)))


def evaluate(original, enhanced, truth=None):
    """Bundle the scores of one enhancement run into a MetricReport."""
    return MetricReport(
        re=restored_edges(original, enhanced),
        psnr=None if truth is None else psnr(enhanced, truth),
        rms_contrast_in=rms_contrast(original),
        rms_contrast_out=rms_contrast(enhanced),
    )
