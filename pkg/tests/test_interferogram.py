import math

import numpy as np
import pytest

from mixedphase import (
    NotHermitianError,
    ROutOfRangeError,
    counter_moving_patterns,
    hermitian_eigen,
    interference_functional,
    peak_shift,
    spin_half_density,
    spin_half_unitary,
    synthesize_pattern,
    validate_density,
    validate_unitary,
    wrap_angle,
)

from helpers import random_density_matrix, random_hermitian, random_unitary


def test_eigen_already_diagonal():
    w, v = hermitian_eigen(np.diag([0.75, 0.25]))
    assert np.array_equal(w, [0.75, 0.25])
    assert np.array_equal(v, np.eye(2, dtype=complex))


def test_eigen_rank_one_projector():
    w, v = hermitian_eigen(np.full((2, 2), 0.5))
    assert w == pytest.approx([1.0, 0.0], abs=1e-12)
    # eigenvectors defined up to phase: compare projectors
    plus = np.array([1.0, 1.0]) / math.sqrt(2)
    minus = np.array([1.0, -1.0]) / math.sqrt(2)
    assert abs(abs(np.vdot(v[:, 0], plus)) - 1.0) < 1e-12
    assert abs(abs(np.vdot(v[:, 1], minus)) - 1.0) < 1e-12


def test_eigen_reconstruction_oracle():
    rng = np.random.default_rng(53)
    for _ in range(30):
        h = random_hermitian(rng, 4)
        w, v = hermitian_eigen(h)
        rebuilt = (v * w) @ v.conj().T
        assert np.max(np.abs(rebuilt - h)) < 1e-10


def test_eigen_residual_and_orthonormality():
    rng = np.random.default_rng(59)
    for n in (2, 3, 5, 8):
        h = random_hermitian(rng, n)
        w, v = hermitian_eigen(h)
        for k in range(n):
            assert np.linalg.norm(h @ v[:, k] - w[k] * v[:, k]) < 1e-10
        assert np.max(np.abs(v.conj().T @ v - np.eye(n))) < 1e-12
        assert np.all(np.diff(w) <= 1e-14)  # descending


def test_eigen_rejects_non_hermitian():
    with pytest.raises(NotHermitianError):
        hermitian_eigen(np.array([[0.0, 1.0], [0.0, 0.0]]))


def test_eigen_one_by_one():
    w, v = hermitian_eigen([[2.5]])
    assert np.array_equal(w, [2.5])
    assert np.array_equal(v, np.eye(1, dtype=complex))


def test_pattern_uniform_at_singularity():
    pattern = synthesize_pattern(spin_half_unitary(math.pi / 2), spin_half_density(0.0), 512)
    assert np.max(np.abs(pattern.intensity - 1.0)) < 1e-12
    weights = sorted(ch.weight for ch in pattern.channels)
    assert weights == pytest.approx([0.5, 0.5], abs=1e-12)
    # the two counter-moving fringes sit pi apart
    shift = abs(wrap_angle(pattern.channels[0].phase - pattern.channels[1].phase))
    assert shift == pytest.approx(math.pi, abs=1e-12)


def test_pattern_pure_state_single_channel():
    pattern = synthesize_pattern(spin_half_unitary(0.7), spin_half_density(1.0), 512)
    expected = 1.0 + np.cos(pattern.chi - 0.7)
    assert np.max(np.abs(pattern.intensity - expected)) < 1e-12
    assert pattern.channels[0].weight == pytest.approx(1.0, abs=1e-12)
    assert pattern.channels[1].weight == pytest.approx(0.0, abs=1e-12)


def test_pattern_identity_unitary():
    rng = np.random.default_rng(61)
    rho = validate_density(random_density_matrix(rng, 3))
    pattern = synthesize_pattern(validate_unitary(np.eye(3)), rho, 256)
    assert np.max(np.abs(pattern.intensity - (1.0 + np.cos(pattern.chi)))) < 1e-12


def test_pattern_invariants():
    rng = np.random.default_rng(67)
    for _ in range(20):
        n = int(rng.integers(2, 5))
        u = validate_unitary(random_unitary(rng, n))
        rho = validate_density(random_density_matrix(rng, n))
        pattern = synthesize_pattern(u, rho, 128)
        rebuilt = np.ones_like(pattern.chi)
        z_channels = 0.0 + 0.0j
        for weight, vis, theta in pattern.channels:
            assert weight >= 0.0
            assert 0.0 <= vis <= 1.0 + 1e-12
            assert -math.pi < theta <= math.pi
            rebuilt = rebuilt + weight * vis * np.cos(pattern.chi - theta)
            z_channels += weight * vis * np.exp(1j * theta)
        assert np.max(np.abs(pattern.intensity - rebuilt)) < 1e-12
        assert abs(sum(ch.weight for ch in pattern.channels) - 1.0) < 1e-10
        assert abs(z_channels - pattern.source.z) < 1e-10
        assert np.min(pattern.intensity) >= -1e-12


def test_pattern_needs_enough_samples():
    with pytest.raises(ValueError):
        synthesize_pattern(spin_half_unitary(0.1), spin_half_density(0.5), 4)


def test_peak_shift_mixed_point():
    # frozen closed form at (r, delta) = (0.5, pi/4)
    pattern = synthesize_pattern(spin_half_unitary(math.pi / 4), spin_half_density(0.5), 1024)
    peak = peak_shift(pattern)
    assert not peak.indeterminate
    assert peak.chi_star == pytest.approx(0.4636476090008061, abs=1e-6)
    assert peak.contrast == pytest.approx(0.7905694150420949, abs=1e-9)


def test_peak_shift_uniform_pattern():
    pattern = synthesize_pattern(spin_half_unitary(math.pi / 2), spin_half_density(0.0), 512)
    peak = peak_shift(pattern)
    assert peak.indeterminate
    assert math.isnan(peak.chi_star)
    assert peak.contrast < 1e-12


def test_peak_shift_pure_state():
    pattern = synthesize_pattern(spin_half_unitary(1.0), spin_half_density(1.0), 1024)
    peak = peak_shift(pattern)
    assert peak.chi_star == pytest.approx(1.0, abs=1e-6)
    assert peak.contrast == pytest.approx(1.0, abs=1e-9)


@pytest.mark.parametrize("chi_samples", [64, 256, 1024])
def test_peak_matches_source_phase_within_grid_tolerance(chi_samples):
    rng = np.random.default_rng(71)
    tolerance = max(1e-6, (2 * math.pi / chi_samples) ** 2)
    for _ in range(20):
        n = int(rng.integers(2, 5))
        u = validate_unitary(random_unitary(rng, n))
        rho = validate_density(random_density_matrix(rng, n))
        pattern = synthesize_pattern(u, rho, chi_samples)
        peak = peak_shift(pattern)
        if peak.indeterminate or pattern.source.indeterminate:
            continue
        assert abs(wrap_angle(peak.chi_star - pattern.source.phase)) < tolerance


def test_contrast_equals_visibility():
    rng = np.random.default_rng(73)
    for _ in range(30):
        n = int(rng.integers(2, 5))
        u = validate_unitary(random_unitary(rng, n))
        rho = validate_density(random_density_matrix(rng, n))
        pattern = synthesize_pattern(u, rho, 1024)
        peak = peak_shift(pattern)
        expected = interference_functional(u, rho).visibility
        assert peak.contrast == pytest.approx(expected, abs=1e-9)


def test_counter_moving_channels():
    patterns = counter_moving_patterns(0.0, [0.0, math.pi / 4, math.pi / 2], 512)
    for pattern, delta in zip(patterns, [0.0, math.pi / 4, math.pi / 2]):
        plus, minus = pattern.channels
        assert plus.weight == pytest.approx(0.5, abs=1e-15)
        assert minus.weight == pytest.approx(0.5, abs=1e-15)
        assert plus.phase == pytest.approx(wrap_angle(delta), abs=1e-15)
        assert minus.phase == pytest.approx(wrap_angle(-delta), abs=1e-15)
    # third pattern is uniform illumination
    assert np.max(np.abs(patterns[2].intensity - 1.0)) < 1e-12
    relative = abs(wrap_angle(patterns[2].channels[0].phase - patterns[2].channels[1].phase))
    assert relative == pytest.approx(math.pi, abs=1e-15)


def test_counter_moving_pure_state():
    (pattern,) = counter_moving_patterns(1.0, [0.9], 256)
    assert pattern.channels[1].weight == 0.0
    assert pattern.channels[0].weight == 1.0


def test_counter_moving_matches_synthesized_intensity():
    for r, delta in [(0.0, 0.4), (0.5, 2.2), (-0.7, 1.0)]:
        (demo,) = counter_moving_patterns(r, [delta], 256)
        general = synthesize_pattern(spin_half_unitary(delta), spin_half_density(r), 256)
        assert np.max(np.abs(demo.intensity - general.intensity)) < 1e-12


def test_counter_moving_range_check():
    with pytest.raises(ROutOfRangeError):
        counter_moving_patterns(1.5, [0.1])
