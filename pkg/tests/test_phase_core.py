import cmath
import math

import numpy as np
import pytest

from mixedphase import (
    BadSpinError,
    DimensionMismatchError,
    InterferencePhase,
    ROutOfRangeError,
    SpinHalfPoint,
    SpinSystem,
    ValidationError,
    ZeroVectorError,
    interference_functional,
    linear_weight_family,
    pancharatnam_phase,
    pure_state_density,
    spin_half_density,
    spin_half_functional,
    spin_half_unitary,
    spin_system_density,
    spin_system_functional,
    validate_density,
    validate_unitary,
    wrap_angle,
    zeeman_unitary,
)

from helpers import random_density_matrix, random_unitary


def closed_form(r, delta):
    return complex(math.cos(delta), r * math.sin(delta))


def test_functional_identity_unitary():
    rho = validate_density(np.diag([0.3, 0.2, 0.5]))
    u = validate_unitary(np.eye(3))
    result = interference_functional(u, rho)
    assert abs(result.z - 1.0) < 1e-15
    assert result.phase == 0.0
    assert result.visibility == pytest.approx(1.0, abs=1e-15)


def test_functional_spin_half_point():
    # frozen: z = cos(pi/4) + 0.5i sin(pi/4), c = sqrt(0.625), phi = atan(0.5)
    result = interference_functional(spin_half_unitary(math.pi / 4), spin_half_density(0.5))
    assert abs(result.z - (0.7071067811865476 + 0.35355339059327373j)) < 1e-12
    assert result.visibility == pytest.approx(0.7905694150420949, abs=1e-12)
    assert result.phase == pytest.approx(0.4636476090008061, abs=1e-12)
    assert not result.indeterminate


def test_functional_zero_contrast_point():
    result = interference_functional(
        spin_half_unitary(math.pi / 2), spin_half_density(0.0), epsilon=1e-9
    )
    assert result.indeterminate
    assert result.visibility < 1e-15
    assert math.isnan(result.phase)


def test_functional_dimension_mismatch():
    u = validate_unitary(np.eye(3))
    rho = spin_half_density(0.5)
    with pytest.raises(DimensionMismatchError):
        interference_functional(u, rho)


def test_interference_phase_invariants():
    rng = np.random.default_rng(3)
    for _ in range(300):
        z = complex(rng.normal(), rng.normal()) * 0.5
        ip = InterferencePhase.from_z(z, epsilon=1e-9)
        assert ip.visibility == abs(z)
        assert ip.indeterminate == (ip.visibility <= 1e-9)
        if not ip.indeterminate:
            assert -math.pi < ip.phase <= math.pi
            assert abs(ip.z - ip.visibility * cmath.exp(1j * ip.phase)) < 1e-12


def test_pancharatnam_pure_basis_state():
    ip = pancharatnam_phase([1.0, 0.0], spin_half_unitary(0.7))
    assert ip.phase == pytest.approx(0.7, abs=1e-15)
    assert ip.visibility == pytest.approx(1.0, abs=1e-15)


def test_pancharatnam_identity():
    ip = pancharatnam_phase([0.3 + 1j, -2.0], validate_unitary(np.eye(2)))
    assert ip.phase == 0.0
    assert ip.visibility == pytest.approx(1.0, abs=1e-15)


def test_pancharatnam_equal_superposition():
    # z = (e^{i 0.4} + e^{-i 0.4})/2 = cos 0.4
    ip = pancharatnam_phase(np.array([1.0, 1.0]) / math.sqrt(2), spin_half_unitary(0.4))
    assert abs(ip.z - math.cos(0.4)) < 1e-15
    assert ip.phase == pytest.approx(0.0, abs=1e-15)
    assert ip.visibility == pytest.approx(0.9210609940028851, abs=1e-12)


def test_pancharatnam_zero_vector():
    with pytest.raises(ZeroVectorError):
        pancharatnam_phase([0.0, 0.0], spin_half_unitary(0.1))


def test_pancharatnam_agrees_with_functional():
    rng = np.random.default_rng(5)
    for _ in range(200):
        n = int(rng.integers(2, 5))
        psi = rng.normal(size=n) + 1j * rng.normal(size=n)
        u = validate_unitary(random_unitary(rng, n))
        direct = pancharatnam_phase(psi, u)
        via_rho = interference_functional(u, pure_state_density(psi))
        assert abs(direct.z - via_rho.z) < 1e-12


def test_spin_half_density_values():
    assert np.array_equal(spin_half_density(1.0).matrix, np.diag([1.0, 0.0]).astype(complex))
    assert np.array_equal(spin_half_density(0.0).matrix, np.diag([0.5, 0.5]).astype(complex))
    assert np.max(np.abs(spin_half_density(-0.2).matrix - np.diag([0.4, 0.6]))) < 1e-15


def test_spin_half_density_range():
    with pytest.raises(ROutOfRangeError):
        spin_half_density(1.0001)


def test_spin_half_unitary_values():
    assert np.array_equal(spin_half_unitary(0.0).matrix, np.eye(2, dtype=complex))
    assert np.max(np.abs(spin_half_unitary(math.pi).matrix - np.diag([-1.0, -1.0]))) < 1e-15
    assert np.max(np.abs(spin_half_unitary(math.pi / 2).matrix - np.diag([1j, -1j]))) < 1e-15


def test_spin_half_functional_pure_state_is_linear():
    for delta in (0.3, 2.0, 5.5, -1.2):
        ip = spin_half_functional(1.0, delta)
        assert abs(ip.z - cmath.exp(1j * delta)) < 1e-15
        assert ip.phase == pytest.approx(wrap_angle(delta), abs=1e-12)
        assert ip.visibility == pytest.approx(1.0, abs=1e-15)


def test_spin_half_functional_unpolarized():
    ip = spin_half_functional(0.0, math.pi / 4)
    assert abs(ip.z - 0.7071067811865476) < 1e-15
    assert ip.phase == 0.0
    assert ip.visibility == pytest.approx(0.7071067811865476, abs=1e-15)


def test_spin_half_functional_singular_point():
    assert spin_half_functional(0.0, 3 * math.pi / 2).indeterminate


def test_spin_half_functional_matches_matrix_route():
    rng = np.random.default_rng(23)
    for _ in range(500):
        r = float(rng.uniform(-1, 1))
        delta = float(rng.uniform(-12, 12))
        direct = spin_half_functional(r, delta)
        via_matrices = interference_functional(spin_half_unitary(delta), spin_half_density(r))
        assert abs(direct.z - via_matrices.z) < 1e-12


def test_spin_half_point_validation():
    SpinHalfPoint(0.5, 100.0)
    with pytest.raises(ROutOfRangeError):
        SpinHalfPoint(-1.5, 0.0)
    with pytest.raises(ValidationError):
        SpinHalfPoint(0.0, float("inf"))


def test_zeeman_unitary_spin_one():
    u = zeeman_unitary(1.0, math.pi)
    assert np.max(np.abs(u.matrix - np.diag([-1.0, 1.0, -1.0]))) < 1e-15


def test_zeeman_unitary_zero_angle():
    for j in (0.5, 1.0, 1.5, 2.0):
        dim = int(2 * j + 1)
        assert np.array_equal(zeeman_unitary(j, 0.0).matrix, np.eye(dim, dtype=complex))


def test_zeeman_matches_spin_half_convention():
    # each spin-1/2 level carries e^{+-i delta}, i.e. m delta with delta doubled
    u_half = spin_half_unitary(0.7)
    u_zeeman = zeeman_unitary(0.5, 2 * 0.7)
    assert np.max(np.abs(u_half.matrix - u_zeeman.matrix)) < 1e-15


@pytest.mark.parametrize("j", [0.0, -0.5, 0.75, 1.2])
def test_zeeman_bad_spin(j):
    with pytest.raises(BadSpinError):
        zeeman_unitary(j, 1.0)


def test_spin_system_uniform_spin_one():
    system = SpinSystem(1.0, (1 / 3, 1 / 3, 1 / 3))
    for delta in (0.3, 1.0, 2.5):
        expected = (1 + 2 * math.cos(delta)) / 3
        assert abs(spin_system_functional(system, delta).z - expected) < 1e-15
    assert spin_system_functional(system, 2 * math.pi / 3).indeterminate


def test_spin_system_single_level():
    system = SpinSystem(1.0, (1.0, 0.0, 0.0))
    ip = spin_system_functional(system, 1.3)
    assert abs(ip.z - cmath.exp(1.3j)) < 1e-15
    assert ip.visibility == pytest.approx(1.0, abs=1e-15)


def test_spin_system_three_halves_cancellation():
    system = SpinSystem(1.5, (0.25, 0.25, 0.25, 0.25))
    ip = spin_system_functional(system, math.pi / 2)
    # pairwise cancellation of e^{+-3i pi/4} with e^{+-i pi/4}
    assert ip.visibility < 1e-15
    assert ip.indeterminate


def test_spin_system_validation():
    with pytest.raises(BadSpinError):
        SpinSystem(1.0, (0.5, 0.5))
    with pytest.raises(ValidationError):
        SpinSystem(0.5, (1.2, -0.2))
    with pytest.raises(ValidationError):
        SpinSystem(0.5, (0.6, 0.6))


def test_spin_system_matches_matrix_route():
    rng = np.random.default_rng(31)
    for j in (0.5, 1.0, 1.5):
        dim = int(2 * j + 1)
        for _ in range(50):
            raw = rng.uniform(0.05, 1.0, size=dim)
            weights = tuple((raw / raw.sum()).tolist())
            system = SpinSystem(j, weights)
            delta = float(rng.uniform(-8, 8))
            direct = spin_system_functional(system, delta)
            via = interference_functional(zeeman_unitary(j, delta), spin_system_density(system))
            assert abs(direct.z - via.z) < 1e-12


def test_linear_weight_family_reduces_to_spin_half():
    system = linear_weight_family(0.5, 0.5)
    assert system.weights == pytest.approx((0.75, 0.25), abs=1e-15)


def test_linear_weight_family_uniform_at_zero():
    for j in (0.5, 1.0, 2.5):
        system = linear_weight_family(j, 0.0)
        assert all(w == pytest.approx(1 / (2 * j + 1), abs=1e-15) for w in system.weights)


def test_linear_weight_family_spin_one_extremes():
    system = linear_weight_family(1.0, 1.0)
    assert system.weights == pytest.approx((2 / 3, 1 / 3, 0.0), abs=1e-15)
    with pytest.raises(ROutOfRangeError):
        linear_weight_family(1.0, 1.5)


def test_unitary_covariance():
    rng = np.random.default_rng(37)
    for _ in range(200):
        n = int(rng.integers(2, 5))
        u = validate_unitary(random_unitary(rng, n))
        rho = validate_density(random_density_matrix(rng, n))
        v = random_unitary(rng, n)
        u2 = validate_unitary(v @ u.matrix @ v.conj().T)
        rho2 = validate_density(v @ rho.matrix @ v.conj().T)
        assert abs(interference_functional(u2, rho2).z - interference_functional(u, rho).z) < 1e-11


def test_global_phase_shift():
    rng = np.random.default_rng(41)
    for _ in range(200):
        n = int(rng.integers(2, 5))
        u = validate_unitary(random_unitary(rng, n))
        rho = validate_density(random_density_matrix(rng, n))
        alpha = float(rng.uniform(-math.pi, math.pi))
        base = interference_functional(u, rho)
        shifted = interference_functional(validate_unitary(np.exp(1j * alpha) * u.matrix), rho)
        assert shifted.visibility == pytest.approx(base.visibility, abs=1e-12)
        if not base.indeterminate:
            gap = wrap_angle(shifted.phase - base.phase - alpha)
            assert abs(gap) < 1e-12


def test_conjugation_symmetry():
    rng = np.random.default_rng(43)
    for _ in range(500):
        r = float(rng.uniform(-1, 1))
        delta = float(rng.uniform(-10, 10))
        z_plus = spin_half_functional(r, delta).z
        z_minus = spin_half_functional(-r, delta).z
        assert abs(z_minus - z_plus.conjugate()) < 1e-15


def test_visibility_bounded_by_one():
    rng = np.random.default_rng(47)
    for _ in range(300):
        n = int(rng.integers(2, 6))
        u = validate_unitary(random_unitary(rng, n))
        rho = validate_density(random_density_matrix(rng, n))
        assert interference_functional(u, rho).visibility <= 1.0 + 1e-12


def test_wrap_angle_branch():
    assert wrap_angle(math.pi) == math.pi
    assert wrap_angle(-math.pi) == math.pi
    assert wrap_angle(3 * math.pi) == pytest.approx(math.pi, abs=1e-12)
    assert wrap_angle(0.0) == 0.0
    assert wrap_angle(2 * math.pi) == pytest.approx(0.0, abs=1e-12)
