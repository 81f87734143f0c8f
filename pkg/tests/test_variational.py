"""Energy evaluation and the grouped shrinkage prox."""

import math

import numpy as np
import pytest

from desmoke.gradients import GradWeights
from desmoke.variational import SolverParams, energy, group_shrink, tv_norm


def loop_tv(t, wx, wy, wc):
    # voxel-at-a-time reference with explicit modular indexing
    h, w, _ = t.shape
    acc = 0.0
    for i in range(h):
        for j in range(w):
            for k in range(3):
                dx = wx * (t[i, (j + 1) % w, k] - t[i, j, k])
                dy = wy * (t[(i + 1) % h, j, k] - t[i, j, k])
                dc = wc * (t[i, j, (k + 1) % 3] - t[i, j, k])
                acc += math.sqrt(dx * dx + dy * dy + dc * dc)
    return acc


def loop_energy(f, i_img, lam, wx, wy, wc):
    fid = 0.0
    for idx in np.ndindex(*f.shape):
        fid += (f[idx] - i_img[idx]) ** 2
    return 0.5 * lam * fid + loop_tv(f, wx, wy, wc)


def prox_objective(u, v, rho):
    # per-voxel objective of the shrinkage sub-problem
    return (np.linalg.norm(u)
            + 0.5 * rho * float(np.sum((u - v) ** 2)))


def best_candidate_value(v, rho, rng, n=100_000):
    """Brute-force search over scaled directions and random offsets."""
    vn = np.linalg.norm(v)
    cands = []
    # the minimizer lies on the segment [0, v]; sample it densely anyway
    for a in np.linspace(0.0, 1.0, n // 2):
        cands.append(a * v)
    for _ in range(n - len(cands)):
        cands.append(v + rng.normal(scale=max(vn, 0.2), size=3))
    return min(prox_objective(np.asarray(u), v, rho) for u in cands)


def test_tv_of_constant_is_zero():
    t = np.full((4, 4, 3), 0.3)
    assert tv_norm(t, GradWeights()) == 0.0


def test_tv_channel_ramp_closed_form():
    # channel values (0, .5, 1) per pixel; spatial differences vanish
    t = np.zeros((2, 2, 3))
    t[..., 1] = 0.5
    t[..., 2] = 1.0
    got = tv_norm(t, GradWeights())
    assert abs(got - 8.0) < 1e-12


def test_tv_matches_loop_oracle():
    rng = np.random.default_rng(211)
    for wts in (GradWeights(), GradWeights(0.5, 2.0, 1.25)):
        t = rng.random((4, 4, 3))
        ref = loop_tv(t, wts.x, wts.y, wts.c)
        assert abs(tv_norm(t, wts) - ref) <= 1e-12 * max(1.0, ref)


def test_energy_at_input_reduces_to_tv():
    rng = np.random.default_rng(223)
    i_img = rng.random((5, 4, 3))
    p = SolverParams()
    assert energy(i_img, i_img, p) == tv_norm(i_img, p.weights)


def test_energy_constant_closed_form():
    f = np.full((3, 3, 3), 0.7)
    i_img = np.full((3, 3, 3), 0.2)
    p = SolverParams(lmbda=1.0)
    assert abs(energy(f, i_img, p) - 0.5 * 27 * 0.25) < 1e-12


def test_energy_matches_loop_oracle():
    rng = np.random.default_rng(227)
    f = rng.random((4, 4, 3))
    i_img = rng.random((4, 4, 3))
    p = SolverParams(lmbda=1.7, weights=GradWeights(1.1, 0.9, 1.3))
    ref = loop_energy(f, i_img, 1.7, 1.1, 0.9, 1.3)
    assert abs(energy(f, i_img, p) - ref) <= 1e-12 * max(1.0, ref)


def test_energy_shape_mismatch():
    with pytest.raises(ValueError):
        energy(np.zeros((2, 2, 3)), np.zeros((3, 2, 3)), SolverParams())


def test_energy_convex_along_midpoints():
    rng = np.random.default_rng(229)
    p = SolverParams()
    i_img = rng.random((4, 4, 3))
    for _ in range(20):
        f1 = rng.normal(size=(4, 4, 3))
        f2 = rng.normal(size=(4, 4, 3))
        mid = energy(0.5 * (f1 + f2), i_img, p)
        assert mid <= 0.5 * (energy(f1, i_img, p) + energy(f2, i_img, p)) + 1e-10


def _voxel_stack(vec):
    # a 2x2 stack whose voxel (0, 0, 0) carries the given 3-vector
    g = np.zeros((3, 2, 2, 3))
    g[:, 0, 0, 0] = vec
    return g


def test_shrink_unit_vector():
    out = group_shrink(_voxel_stack([1.0, 0.0, 0.0]), rho=5.0, eps=1e-8)
    assert np.allclose(out[:, 0, 0, 0], [0.8, 0.0, 0.0], atol=1e-12)


def test_shrink_dead_zone_example():
    out = group_shrink(_voxel_stack([0.06, 0.08, 0.0]), rho=5.0, eps=1e-8)
    assert np.all(out == 0.0)


def test_shrink_diagonal_example():
    out = group_shrink(_voxel_stack([3.0, 3.0, 0.0]), rho=1.0, eps=1e-8)
    m = math.sqrt(18.0)
    expect = 3.0 * (m - 1.0) / m
    assert abs(expect - 2.2928932) < 1e-6
    assert np.allclose(out[:, 0, 0, 0], [expect, expect, 0.0], atol=1e-12)


def test_shrink_against_brute_force():
    rng = np.random.default_rng(233)
    for rho in (0.5, 1.0, 5.0):
        for _ in range(3):
            v = rng.normal(scale=1.5, size=3)
            got = prox_objective(group_shrink(_voxel_stack(v), rho, 1e-8)[:, 0, 0, 0],
                                 np.asarray(v), rho)
            best = best_candidate_value(np.asarray(v), rho, rng, n=20_000)
            assert got <= best + 1e-6


def test_shrink_dead_zone_and_direction_grid():
    rng = np.random.default_rng(239)
    for rho in (0.5, 1.0, 5.0, 20.0):
        v = rng.normal(size=(3, 6, 6, 3))
        out = group_shrink(v, rho, 1e-8)
        mag_in = np.sqrt(np.sum(v * v, axis=0))
        mag_out = np.sqrt(np.sum(out * out, axis=0))
        dead = mag_in <= 1.0 / rho
        assert np.all(mag_out[dead] == 0.0)
        # surviving voxels keep their direction and lose exactly 1/rho of magnitude
        live = ~dead
        assert np.allclose(mag_out[live], mag_in[live] - 1.0 / rho, atol=1e-12)
        cos = np.sum(v * out, axis=0)[live] / (mag_in[live] * mag_out[live])
        assert np.all(cos > 1.0 - 1e-12)


def test_shrink_nonexpansive():
    rng = np.random.default_rng(241)
    v = rng.normal(scale=2.0, size=(3, 5, 5, 3))
    out = group_shrink(v, 2.0, 1e-8)
    assert np.max(np.abs(out)) <= np.max(np.abs(v))
    mag_in = np.sqrt(np.sum(v * v, axis=0))
    mag_out = np.sqrt(np.sum(out * out, axis=0))
    assert np.all(mag_out <= mag_in + 1e-15)


def test_params_validated():
    with pytest.raises(ValueError):
        SolverParams(lmbda=0.0)
    with pytest.raises(ValueError):
        SolverParams(rho=-1.0)
    with pytest.raises(ValueError):
        SolverParams(max_iter=0)
    with pytest.raises(ValueError):
        SolverParams(tol=0.0)
    with pytest.raises(ValueError):
        SolverParams(eps=0.0)
