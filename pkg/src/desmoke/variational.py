"""The smoke-layer energy and its proximal building blocks.

The layer estimate minimizes a fidelity term plus an isotropic total
variation penalty evaluated on the weighted gradient stack. The TV
term couples the three difference directions at each voxel, so its
prox shrinks whole voxel vectors toward zero instead of individual
components.
"""

from dataclasses import dataclass, field

import numpy as np

from .gradients import GradWeights, weighted_gradient


@dataclass(frozen=True)
class SolverParams:
    """Knobs of the decomposition energy and its solver.

    lmbda weighs data fidelity against smoothness, rho is the penalty
    strength of the splitting scheme, eps guards divisions by tiny
    gradient magnitudes, and tol is the relative residual tolerance
    of the stopping rule.
    """

    lmbda: float = 1.0
    weights: GradWeights = field(default_factory=GradWeights)
    rho: float = 5.0
    eps: float = 1e-8
    max_iter: int = 100
    tol: float = 1e-4

    def __post_init__(self):
        if self.lmbda <= 0:
            raise ValueError("lmbda must be positive")
        if self.rho <= 0:
            raise ValueError("rho must be positive")
        if self.eps <= 0:
            raise ValueError("eps must be positive")
        if self.max_iter < 1:
            raise ValueError("max_iter must be at least 1")
        if self.tol <= 0:
            raise ValueError("tol must be positive")


def tv_norm(t, weights):
    """Isotropic total variation: summed per-voxel gradient magnitudes."""
    g = weighted_gradient(t, weights)
    return float(np.sum(np.sqrt(np.sum(g * g, axis=0))))


def energy(candidate, image, params):
    """Fidelity plus smoothness of a candidate smoke layer.

    Returns 0.5 * lmbda * ||candidate - image||^2 + tv_norm(candidate).
    """
    if candidate.shape != image.shape:
        raise ValueError("shape mismatch: %s vs %s"
                         % (candidate.shape, image.shape))
    fidelity = 0.5 * params.lmbda * float(np.sum((candidate - image) ** 2))
    return fidelity + tv_norm(candidate, params.weights)


def group_shrink(v, rho, eps):
    """Grouped soft threshold of a gradient stack at radius 1/rho.

    Each voxel's three direction components shrink together: the voxel
    magnitude drops by 1/rho, or to zero if it was already below that.
    Directions of surviving voxels are preserved. eps floors the
    magnitude before division; such voxels shrink to zero anyway.
    """
    mag = np.sqrt(np.sum(v * v, axis=0))
    mag = np.maximum(mag, eps)
    factor = np.maximum(mag - 1.0 / rho, 0.0) / mag
    return factor * v
