"""Surgical smoke removal by smooth-layer decomposition.

A smoked frame is modeled as a clean image plus a smooth, nearly
color-neutral layer. The layer is recovered by minimizing a fidelity
plus total-variation energy with an alternating-direction scheme whose
linear step solves exactly in the Fourier domain; subtracting the
layer, weighted by its per-channel mean, yields the enhanced image.
"""

from .gradients import (GradWeights, adjoint_diff, forward_diff,
                        weighted_gradient, weighted_gradient_adjoint)
from .imgio import load_image, save_image
from .metrics import (MetricReport, evaluate, psnr, restored_edges,
                      rms_contrast, visible_edges)
from .pipeline import DecompositionResult, channel_means, remove_smoke
from .solver import SolveDiagnostics, estimate_smoke
from .spectral import SpectralKernel, build_kernel, fft3, ifft3, solve_quadratic
from .synth import SmokeSpec, apply_smoke, generate_smoke_field
from .tensor import clamp01, dot, new_tensor
from .variational import SolverParams, energy, group_shrink, tv_norm

__version__ = "0.1.0"

__all__ = [
    "GradWeights", "adjoint_diff", "forward_diff", "weighted_gradient",
    "weighted_gradient_adjoint",
    "load_image", "save_image",
    "MetricReport", "evaluate", "psnr", "restored_edges", "rms_contrast",
    "visible_edges",
    "DecompositionResult", "channel_means", "remove_smoke",
    "SolveDiagnostics", "estimate_smoke",
    "SpectralKernel", "build_kernel", "fft3", "ifft3", "solve_quadratic",
    "SmokeSpec", "apply_smoke", "generate_smoke_field",
    "clamp01", "dot", "new_tensor",
    "SolverParams", "energy", "group_shrink", "tv_norm",
]
