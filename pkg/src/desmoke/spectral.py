"""Fourier transforms on (H, W, 3) grids and the quadratic-step solve.

With periodic boundaries the normal operator of the weighted gradient
is circulant along all three axes, so the regularized least-squares
step of the splitting iteration diagonalizes under a 3D DFT whose
third axis is the length-3 channel axis. The per-frequency denominator
is precomputed once per grid size and parameter set and reused across
iterations and images.
"""

import numpy as np

from .gradients import weighted_gradient_adjoint


class SpectralKernel:
    """Precomputed real denominator field for solve_quadratic.

    Immutable after construction; safe to share across worker threads
    and reuse for any image of the shape and parameters in `key`.
    """

    __slots__ = ("denom", "key")

    def __init__(self, denom, key):
        self.denom = denom
        self.key = key


def _kernel_key(height, width, params):
    w = params.weights
    return (height, width, params.lmbda, params.rho, w.x, w.y, w.c)


def build_kernel(height, width, params):
    """Denominator lmbda + rho * sum of squared difference symbols.

    The squared DFT symbol of a periodic forward difference on an axis
    of length n is |e^(2 pi i k / n) - 1|^2 = 4 sin^2(pi k / n), so the
    zero-frequency bin is exactly lmbda and every bin is >= lmbda.
    """
    if height < 2 or width < 2:
        raise ValueError("kernel needs a grid of at least 2x2 pixels")
    w = params.weights
    sy = 4.0 * w.y ** 2 * np.sin(np.pi * np.arange(height) / height) ** 2
    sx = 4.0 * w.x ** 2 * np.sin(np.pi * np.arange(width) / width) ** 2
    sc = 4.0 * w.c ** 2 * np.sin(np.pi * np.arange(3) / 3.0) ** 2
    denom = params.lmbda + params.rho * (
        sy[:, None, None] + sx[None, :, None] + sc[None, None, :])
    return SpectralKernel(denom, _kernel_key(height, width, params))


def fft3(t):
    """Forward 3D DFT over height, width and channel axes, unnormalized."""
    return np.fft.fftn(t)


def ifft3(c):
    """Inverse 3D DFT scaled by 1/(H*W*3); imaginary residue discarded."""
    return np.fft.ifftn(c).real


def solve_quadratic(image, aux, mult, kernel, params):
    """Exact minimizer of the smoothing sub-problem.

    Solves (lmbda Id + rho D^T D) f = lmbda image + D^T (rho aux - mult)
    in the Fourier domain, where D is the weighted gradient the kernel
    was built for, aux is the split gradient target and mult holds the
    running multipliers.
    """
    if kernel.key != _kernel_key(image.shape[0], image.shape[1], params):
        raise ValueError("kernel built for different grid or parameters")
    rhs = params.lmbda * image + weighted_gradient_adjoint(
        params.rho * aux - mult, params.weights)
    return ifft3(fft3(rhs) / kernel.denom)
