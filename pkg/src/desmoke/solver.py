"""Alternating-direction minimization of the smoke-layer energy.

Each cycle runs the exact Fourier-domain quadratic step for the layer,
a grouped shrinkage of its lifted gradients, and a multiplier update.
The energy is recorded per iteration for diagnostics but termination
uses primal and dual residuals; alternating-direction iterations are
not monotone in energy.
"""

from dataclasses import dataclass, field

import numpy as np

from .spectral import build_kernel, solve_quadratic
from .tensor import require_unit_range
from .gradients import weighted_gradient, weighted_gradient_adjoint
from .variational import SolverParams, energy, group_shrink


@dataclass
class SolveDiagnostics:
    """Per-iteration traces of one solve; lengths equal `iterations`."""

    iterations: int = 0
    energy_trace: list = field(default_factory=list)
    primal_residual_trace: list = field(default_factory=list)
    dual_residual_trace: list = field(default_factory=list)
    converged: bool = False


def _norm(a):
    return float(np.linalg.norm(a.reshape(-1)))


def estimate_smoke(image, params=None, kernel=None):
    """Estimate the smooth smoke layer of an image in [0,1].

    Parameters
    ----------
    image : ndarray, shape (H, W, 3)
        Smoked input with intensities in [0, 1].
    params : SolverParams, optional
        Energy and iteration knobs; defaults reproduce the reference
        parameterization (lmbda=1, unit weights, rho=5).
    kernel : SpectralKernel, optional
        Precomputed denominator to reuse across images of identical
        shape and params. Built on the fly when omitted.

    Returns
    -------
    (smoke, diag)
        The layer estimate (unconstrained reals) and SolveDiagnostics.
        Non-convergence within max_iter is reported via
        diag.converged, never raised.
    """
    params = params or SolverParams()
    image = require_unit_range(np.asarray(image, dtype=np.float64))
    h, w, _ = image.shape
    if kernel is None:
        kernel = build_kernel(h, w, params)

    smoke = image.copy()
    aux = weighted_gradient(image, params.weights)
    mult = np.zeros_like(aux)
    diag = SolveDiagnostics()

    for _ in range(params.max_iter):
        smoke = solve_quadratic(image, aux, mult, kernel, params)
        lifted = weighted_gradient(smoke, params.weights)
        prev_aux = aux
        aux = group_shrink(lifted + mult / params.rho, params.rho, params.eps)
        mult = mult + params.rho * (lifted - aux)

        primal = _norm(lifted - aux)
        dual = params.rho * _norm(
            weighted_gradient_adjoint(aux - prev_aux, params.weights))
        diag.energy_trace.append(energy(smoke, image, params))
        diag.primal_residual_trace.append(primal)
        diag.dual_residual_trace.append(dual)

        primal_scale = max(_norm(lifted), _norm(aux), params.eps)
        dual_scale = max(
            _norm(weighted_gradient_adjoint(mult, params.weights)), params.eps)
        if primal <= params.tol * primal_scale and dual <= params.tol * dual_scale:
            diag.converged = True
            break

    diag.iterations = len(diag.primal_residual_trace)
    return smoke, diag
