"""Synthetic smoke with known ground truth for end-to-end validation.

Fields are built to satisfy the priors the decomposition exploits:
spatially smooth (low-pass filtered seeded noise) and nearly neutral
across channels (a small multiplicative jitter per channel, bounded by
chroma_jitter). Generation is reproducible bit for bit from the seed;
the generator is PCG64 via numpy's default_rng, fixed here so seeds
mean the same field everywhere.
"""

from dataclasses import dataclass

import numpy as np

from .spectral import fft3, ifft3
from .tensor import clamp01, require_unit_range


@dataclass(frozen=True)
class SmokeSpec:
    """Recipe for one synthetic smoke field."""

    seed: int = 0
    strength: float = 0.3
    smoothness: float = 12.0
    chroma_jitter: float = 0.02

    def __post_init__(self):
        if not 0.0 <= self.strength <= 1.0:
            raise ValueError("strength must lie in [0, 1]")
        if self.smoothness <= 0.0:
            raise ValueError("smoothness must be positive")
        if not 0.0 <= self.chroma_jitter <= 0.1:
            raise ValueError(
                "chroma_jitter above 0.1 would break the neutral-smoke prior")


def generate_smoke_field(height, width, spec):
    """Smooth nonnegative field in [0, strength], channels near-equal.

    Seeded white noise is attenuated in the Fourier domain by a
    Gaussian whose width is the requested correlation length, then
    rescaled to [0, 1] and weighted per channel by (1 - jitter). The
    per-channel point-wise spread never exceeds chroma_jitter*strength.
    """
    if height < 2 or width < 2:
        raise ValueError("field needs a grid of at least 2x2 pixels")
    rng = np.random.default_rng(spec.seed)
    noise = rng.standard_normal((height, width))
    jitter = rng.random(3)

    # channel-replicated input keeps all energy at channel frequency 0,
    # so the 3D transform reduces to the intended spatial filtering
    stack = np.repeat(noise[:, :, None], 3, axis=2)
    fy = np.fft.fftfreq(height)[:, None, None]
    fx = np.fft.fftfreq(width)[None, :, None]
    gauss = np.exp(-2.0 * np.pi ** 2 * spec.smoothness ** 2 * (fx ** 2 + fy ** 2))
    base = ifft3(fft3(stack) * gauss)[:, :, 0]

    base = base - base.min()
    peak = base.max()
    if peak > 0:
        base = base / peak
    scale = spec.strength * (1.0 - spec.chroma_jitter * jitter)
    return base[:, :, None] * scale[None, None, :]


def apply_smoke(clean, field):
    """Overlay a smoke field on a clean image, clamping into [0, 1]."""
    clean = require_unit_range(np.asarray(clean, dtype=np.float64), "clean image")
    field = np.asarray(field, dtype=np.float64)
    if clean.shape != field.shape:
        raise ValueError("shape mismatch: %s vs %s"
                         % (clean.shape, field.shape))
    return clamp01(clean + field)
