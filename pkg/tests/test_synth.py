"""Synthetic smoke fields: priors, determinism, end-to-end recovery."""

import numpy as np
import pytest

from desmoke.metrics import psnr, restored_edges
from desmoke.pipeline import remove_smoke
from desmoke.synth import SmokeSpec, apply_smoke, generate_smoke_field
from desmoke.variational import SolverParams, tv_norm

from scenes import make_clean


def test_zero_strength_gives_zero_field():
    field = generate_smoke_field(16, 16, SmokeSpec(seed=3, strength=0.0))
    assert np.all(field == 0.0)


def test_same_seed_is_bit_identical():
    spec = SmokeSpec(seed=42)
    a = generate_smoke_field(32, 24, spec)
    b = generate_smoke_field(32, 24, spec)
    assert np.array_equal(a, b)


def test_different_seeds_differ():
    a = generate_smoke_field(16, 16, SmokeSpec(seed=1))
    b = generate_smoke_field(16, 16, SmokeSpec(seed=2))
    assert not np.array_equal(a, b)


def test_smoother_setting_lowers_tv():
    wts = SolverParams().weights
    rough = generate_smoke_field(64, 64, SmokeSpec(seed=9, smoothness=2.0))
    smooth = generate_smoke_field(64, 64, SmokeSpec(seed=9, smoothness=16.0))
    assert tv_norm(smooth, wts) < tv_norm(rough, wts)


def test_field_range_and_chroma_bound():
    spec = SmokeSpec(seed=11, strength=0.4, chroma_jitter=0.05)
    field = generate_smoke_field(48, 40, spec)
    assert field.min() >= 0.0
    assert field.max() <= 0.4 + 1e-12
    spread = field.max(axis=2) - field.min(axis=2)
    assert spread.max() <= 0.05 * 0.4 + 1e-12


def test_field_is_smoother_than_textured_scene():
    clean = make_clean(0, 64, 64)
    field = generate_smoke_field(64, 64, SmokeSpec(seed=5))
    wts = SolverParams().weights
    rel_field = tv_norm(field, wts) / max(np.linalg.norm(field), 1e-12)
    rel_clean = tv_norm(clean, wts) / np.linalg.norm(clean)
    assert rel_field < rel_clean


def test_apply_smoke_zero_field_is_identity():
    clean = make_clean(1, 32, 32)
    assert np.array_equal(apply_smoke(clean, np.zeros_like(clean)), clean)


def test_apply_smoke_constant_sum():
    clean = np.full((8, 8, 3), 0.5)
    smoked = apply_smoke(clean, np.full((8, 8, 3), 0.3))
    assert np.allclose(smoked, 0.8, atol=1e-15)


def test_apply_smoke_clamps():
    clean = np.full((8, 8, 3), 0.9)
    smoked = apply_smoke(clean, np.full((8, 8, 3), 0.3))
    assert np.all(smoked == 1.0)


def test_apply_smoke_shape_mismatch():
    with pytest.raises(ValueError):
        apply_smoke(np.zeros((4, 4, 3)), np.zeros((5, 4, 3)))


def test_spec_validation():
    with pytest.raises(ValueError):
        SmokeSpec(strength=1.5)
    with pytest.raises(ValueError):
        SmokeSpec(smoothness=0.0)
    with pytest.raises(ValueError):
        SmokeSpec(chroma_jitter=0.2)


def test_end_to_end_recovery_small():
    clean = make_clean(0, 48, 48)
    field = generate_smoke_field(48, 48, SmokeSpec(seed=21, strength=0.3,
                                                   smoothness=8.0))
    smoked = apply_smoke(clean, field)
    res = remove_smoke(smoked)
    assert psnr(res.enhanced, clean) > psnr(smoked, clean)
    assert restored_edges(smoked, res.enhanced) > 0
