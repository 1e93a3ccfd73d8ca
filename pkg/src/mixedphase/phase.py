"""The interference functional Tr(U rho) and the diagonal spin families.

The complex number z = Tr(U rho) splits into visibility c = |z| and phase
phi = arg z. When c falls at or below the indeterminacy threshold epsilon
the phase carries no information and is flagged indeterminate instead of
being reported. Principal phases live in (-pi, pi]; continuous phases along
paths are the business of the topology module, never of this one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    BadSpinError,
    DimensionMismatchError,
    ROutOfRangeError,
    ValidationError,
    ZeroVectorError,
)
from .qmatrix import (
    DEFAULT_TOL,
    DensityMatrix,
    UnitaryMatrix,
    validate_density,
    validate_unitary,
)

DEFAULT_EPSILON = 1e-9

_TWO_PI = 2.0 * math.pi


def wrap_angle(x: float) -> float:
    """Fold an angle into the principal branch (-pi, pi]."""
    y = math.remainder(float(x), _TWO_PI)
    if y <= -math.pi:
        y += _TWO_PI
    return y


@dataclass(frozen=True)
class InterferencePhase:
    """Value, visibility and principal phase of z = Tr(U rho).

    `phase` is NaN whenever `indeterminate` is set, which happens exactly
    when visibility <= epsilon.
    """

    z: complex
    visibility: float
    phase: float
    indeterminate: bool
    epsilon: float

    @classmethod
    def from_z(cls, z: complex, epsilon: float = DEFAULT_EPSILON) -> "InterferencePhase":
        if epsilon < 0:
            raise ValueError(f"epsilon must be nonnegative, got {epsilon!r}")
        z = complex(z)
        visibility = abs(z)
        if visibility <= epsilon:
            return cls(z, visibility, float("nan"), True, float(epsilon))
        phase = math.atan2(z.imag, z.real)
        if phase <= -math.pi:
            phase += _TWO_PI
        return cls(z, visibility, phase, False, float(epsilon))


@dataclass(frozen=True)
class SpinHalfPoint:
    """A point (r, delta) of the polarization/field-phase parameter plane."""

    r: float
    delta: float

    def __post_init__(self):
        if not (-1.0 <= self.r <= 1.0):
            raise ROutOfRangeError(f"polarization r must lie in [-1, 1], got {self.r!r}")
        if not math.isfinite(self.delta):
            raise ValidationError(f"delta must be finite, got {self.delta!r}")


def interference_functional(
    u: UnitaryMatrix, rho: DensityMatrix, epsilon: float = DEFAULT_EPSILON
) -> InterferencePhase:
    """Evaluate z = Tr(U rho) and split it into visibility and phase."""
    if u.dim != rho.dim:
        raise DimensionMismatchError(f"dimension mismatch: U is {u.dim}, rho is {rho.dim}")
    z = complex(np.trace(u.matrix @ rho.matrix))
    result = InterferencePhase.from_z(z, epsilon)
    # |Tr(U rho)| <= 1 for any unitary U and density rho; allow validation slack
    bound = 1.0 + max(1e-12, u.dim * (u.tolerance + rho.tolerance))
    assert result.visibility <= bound, (
        f"visibility {result.visibility!r} exceeds the unit bound"
    )
    return result


def pancharatnam_phase(psi, u: UnitaryMatrix, epsilon: float = DEFAULT_EPSILON) -> InterferencePhase:
    """Pure-state phase arg <psi|U|psi>, computed directly from the inner product.

    Agrees with interference_functional(u, pure_state_density(psi)) but takes
    the independent vector route.
    """
    v = np.asarray(psi, dtype=np.complex128)
    if v.ndim != 1 or v.size < 1:
        raise ValidationError(f"state vector must be one-dimensional, got shape {v.shape}")
    if not np.all(np.isfinite(v)):
        raise ValidationError("state vector entries must all be finite")
    norm_sq = np.vdot(v, v).real
    if norm_sq == 0.0:
        raise ZeroVectorError("cannot compute the phase of the zero vector")
    if v.size != u.dim:
        raise DimensionMismatchError(f"dimension mismatch: U is {u.dim}, psi has {v.size}")
    z = complex(np.vdot(v, u.matrix @ v) / norm_sq)
    return InterferencePhase.from_z(z, epsilon)


def spin_half_density(r: float) -> DensityMatrix:
    """Spin-1/2 density diag[(1+r)/2, (1-r)/2] in the |z+>, |z-> basis."""
    if not (-1.0 <= r <= 1.0):
        raise ROutOfRangeError(f"polarization r must lie in [-1, 1], got {r!r}")
    m = np.diag([(1.0 + r) / 2.0, (1.0 - r) / 2.0]).astype(np.complex128)
    return validate_density(m, tol=DEFAULT_TOL)


def spin_half_unitary(delta: float) -> UnitaryMatrix:
    """Diagonal spin-1/2 evolution diag(e^{+i delta}, e^{-i delta})."""
    if not math.isfinite(delta):
        raise ValidationError(f"delta must be finite, got {delta!r}")
    m = np.diag([np.exp(1j * delta), np.exp(-1j * delta)])
    return validate_unitary(m, tol=DEFAULT_TOL)


def spin_half_functional(r: float, delta: float, epsilon: float = DEFAULT_EPSILON) -> InterferencePhase:
    """Closed-form spin-1/2 value z = cos(delta) + i r sin(delta)."""
    if not (-1.0 <= r <= 1.0):
        raise ROutOfRangeError(f"polarization r must lie in [-1, 1], got {r!r}")
    if not math.isfinite(delta):
        raise ValidationError(f"delta must be finite, got {delta!r}")
    z = complex(math.cos(delta), r * math.sin(delta))
    return InterferencePhase.from_z(z, epsilon)


def _check_spin(j: float) -> int:
    """Return 2j as an int, rejecting anything but positive half-integers."""
    two_j = 2.0 * j
    rounded = round(two_j)
    if abs(two_j - rounded) > 1e-12 or rounded < 1:
        raise BadSpinError(f"spin must be a positive half-integer, got {j!r}")
    return int(rounded)


def spin_magnetic_numbers(j: float) -> np.ndarray:
    """m = j, j-1, ..., -j as floats (descending)."""
    two_j = _check_spin(j)
    return np.arange(two_j, -two_j - 1, -2, dtype=np.float64) / 2.0


def zeeman_unitary(j: float, delta: float) -> UnitaryMatrix:
    """Diagonal field evolution diag(e^{i m delta}) for m = j ... -j.

    Convention bridge: the spin-1/2 matrix diag(e^{+i d}, e^{-i d}) equals
    zeeman_unitary(1/2, 2*d), since here each level picks up e^{i m delta}
    with m = +-1/2.
    """
    ms = spin_magnetic_numbers(j)
    if not math.isfinite(delta):
        raise ValidationError(f"delta must be finite, got {delta!r}")
    return validate_unitary(np.diag(np.exp(1j * ms * delta)), tol=DEFAULT_TOL)


@dataclass(frozen=True)
class SpinSystem:
    """A spin-j level population: weights p_m for m = j, j-1, ..., -j."""

    j: float
    weights: tuple[float, ...]

    def __post_init__(self):
        two_j = _check_spin(self.j)
        object.__setattr__(self, "weights", tuple(float(w) for w in self.weights))
        if len(self.weights) != two_j + 1:
            raise BadSpinError(
                f"spin {self.j!r} needs {two_j + 1} weights, got {len(self.weights)}"
            )
        if any(w < 0.0 for w in self.weights):
            raise ValidationError(f"weights must be nonnegative, got {self.weights}")
        total = math.fsum(self.weights)
        if abs(total - 1.0) > 1e-12:
            raise ValidationError(f"weights must sum to 1, got {total!r}")

    @property
    def magnetic_numbers(self) -> np.ndarray:
        return spin_magnetic_numbers(self.j)


def spin_system_functional(
    system: SpinSystem, delta: float, epsilon: float = DEFAULT_EPSILON
) -> InterferencePhase:
    """z = sum_m p_m e^{i m delta} for a diagonal spin-j system."""
    if not math.isfinite(delta):
        raise ValidationError(f"delta must be finite, got {delta!r}")
    ms = system.magnetic_numbers
    z = complex(np.sum(np.asarray(system.weights) * np.exp(1j * ms * delta)))
    return InterferencePhase.from_z(z, epsilon)


def linear_weight_family(j: float, r: float) -> SpinSystem:
    """One-parameter polarization family p_m = (1 + r m / j) / (2j + 1).

    Reduces to the spin-1/2 weights ((1+r)/2, (1-r)/2) at j = 1/2 and stays
    a valid population for every |r| <= 1.
    """
    ms = spin_magnetic_numbers(j)
    if not (-1.0 <= r <= 1.0):
        raise ROutOfRangeError(f"polarization r must lie in [-1, 1], got {r!r}")
    weights = (1.0 + r * ms / j) / (2.0 * j + 1.0)
    return SpinSystem(j=float(j), weights=tuple(weights.tolist()))


def spin_system_density(system: SpinSystem) -> DensityMatrix:
    """Diagonal density diag(p_m) matching zeeman_unitary's level ordering."""
    return validate_density(np.diag(system.weights).astype(np.complex128), tol=DEFAULT_TOL)
