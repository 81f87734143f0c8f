"""Numerical sanity checks on the solver building blocks.

Three quick experiments that make the internals tangible:

  1. the gradient and its adjoint satisfy the inner product identity,
  2. the Fourier quadratic solve matches a dense linear solve,
  3. the group shrinkage operator zeroes small gradients and keeps the
     direction of large ones.

Everything prints measured gaps rather than asserting, so the script
doubles as a playground for trying other shapes or weights.
"""

import numpy as np

from desmoke import GradWeights, SolverParams
from desmoke.gradients import weighted_gradient, weighted_gradient_adjoint
from desmoke.spectral import build_kernel, solve_quadratic
from desmoke.variational import group_shrink

rng = np.random.default_rng(0)

# ---- adjoint identity: <D a, g> == <a, D^T g> ------------------------
wts = GradWeights(x=1.0, y=0.7, c=0.3)
a = rng.normal(size=(9, 6, 3))
g = rng.normal(size=(3, 9, 6, 3))
lhs = float(np.sum(weighted_gradient(a, wts) * g))
rhs = float(np.sum(a * weighted_gradient_adjoint(g, wts)))
print("adjoint identity gap: %.3e  (lhs %.6f, rhs %.6f)"
      % (abs(lhs - rhs), lhs, rhs))

# ---- Fourier solve vs dense solve ------------------------------------
# The quadratic step solves (lmbda I + rho D^T D) f = rhs. On a tiny
# image the normal matrix fits in memory, so build it explicitly by
# probing the operator with unit vectors and compare solutions.
p = SolverParams()
h, w = 5, 4
n = h * w * 3
cols = []
for j in range(n):
    e = np.zeros(n)
    e[j] = 1.0
    img = e.reshape(h, w, 3)
    probe = weighted_gradient_adjoint(weighted_gradient(img, p.weights),
                                      p.weights)
    cols.append(p.lmbda * e + p.rho * probe.reshape(-1))
dense = np.column_stack(cols)

img = rng.random((h, w, 3))
aux = rng.normal(size=(3, h, w, 3))
mult = rng.normal(size=(3, h, w, 3))
fast = solve_quadratic(img, aux, mult, build_kernel(h, w, p), p)
rhs_vec = p.lmbda * img.reshape(-1) + weighted_gradient_adjoint(
    p.rho * aux - mult, p.weights).reshape(-1)
ref = np.linalg.solve(dense, rhs_vec).reshape(h, w, 3)
print("fourier vs dense gap: %.3e" % np.max(np.abs(fast - ref)))

# ---- shrinkage geometry ----------------------------------------------
# Per voxel the operator shortens the gradient vector by 1/rho and
# zeroes it entirely when its norm is below 1/rho.
for rho in (1.0, 5.0):
    v = np.zeros((3, 1, 1, 2))
    v[:, 0, 0, 0] = (0.1, 0.1, 0.1)          # short vector, inside 1/rho?
    v[:, 0, 0, 1] = (2.0, -1.0, 0.5)         # long vector
    u = group_shrink(v, rho, 1e-8)
    short_in = np.linalg.norm(v[:, 0, 0, 0])
    print("rho=%-4g |v|=%.3f -> |u|=%.3f   long: |v|=%.3f -> |u|=%.3f"
          % (rho, short_in, np.linalg.norm(u[:, 0, 0, 0]),
             np.linalg.norm(v[:, 0, 0, 1]), np.linalg.norm(u[:, 0, 0, 1])))
