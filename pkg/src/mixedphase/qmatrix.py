"""Minimal dense complex matrix kernel with physics-aware validation.

Matrices are plain complex128 numpy arrays treated as immutable values:
constructors hand back fresh read-only copies and every operation returns
a new array. Validated density and unitary matrices are carried in thin
frozen wrappers so downstream code can rely on their invariants.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionMismatchError,
    NotHermitianError,
    NotPositiveError,
    NotUnitaryError,
    TraceNotOneError,
    ValidationError,
    ZeroVectorError,
)

DEFAULT_TOL = 1e-9


def complex_matrix(entries) -> np.ndarray:
    """Coerce to a square complex128 matrix; returns a read-only copy.

    Rejects non-square input and non-finite entries.
    """
    m = np.array(entries, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] < 1:
        raise DimensionMismatchError(f"expected a square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValidationError("matrix entries must all be finite")
    m.setflags(write=False)
    return m


@dataclass(frozen=True)
class DensityMatrix:
    """A matrix validated as Hermitian, unit-trace and positive semidefinite."""

    matrix: np.ndarray
    tolerance: float = DEFAULT_TOL

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]


@dataclass(frozen=True)
class UnitaryMatrix:
    """A matrix validated to satisfy U^dag U = I within `tolerance`."""

    matrix: np.ndarray
    tolerance: float = DEFAULT_TOL

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]


def mat_mul(a, b) -> np.ndarray:
    """Standard matrix product of two same-dimension square matrices."""
    ma = complex_matrix(a)
    mb = complex_matrix(b)
    if ma.shape != mb.shape:
        raise DimensionMismatchError(
            f"cannot multiply {ma.shape[0]}x{ma.shape[0]} by {mb.shape[0]}x{mb.shape[0]}"
        )
    out = ma @ mb
    out.setflags(write=False)
    return out


def trace(a) -> complex:
    """Sum of the diagonal entries."""
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionMismatchError(f"trace needs a square matrix, got shape {m.shape}")
    return complex(np.trace(m))


def hermiticity_defect(m: np.ndarray) -> float:
    """max |M[i,j] - conj(M[j,i])| over all entries."""
    return float(np.max(np.abs(m - m.conj().T)))


def validate_density(m, tol: float = DEFAULT_TOL) -> DensityMatrix:
    """Validate a density matrix: Hermitian, trace one, positive semidefinite.

    The positivity check diagonalizes the Hermitian part with the Jacobi
    eigensolver from the interferogram module. Raises NotHermitianError,
    TraceNotOneError or NotPositiveError naming the violation magnitude.
    """
    if tol < 0:
        raise ValidationError(f"tolerance must be nonnegative, got {tol!r}")
    mat = complex_matrix(m)
    defect = hermiticity_defect(mat)
    if defect > tol:
        raise NotHermitianError(f"hermiticity defect {defect:.3e} > tolerance {tol:.3e}")
    tr = trace(mat)
    tr_defect = abs(tr - 1.0)
    if tr_defect > tol:
        raise TraceNotOneError(f"trace {tr!r} differs from 1 by {tr_defect:.3e} > {tol:.3e}")
    # deferred import: qmatrix <-> interferogram would otherwise be cyclic
    from .interferogram import hermitian_eigen

    eigenvalues, _ = hermitian_eigen((mat + mat.conj().T) / 2.0)
    smallest = float(eigenvalues[-1])
    if smallest < -tol:
        raise NotPositiveError(f"smallest eigenvalue {smallest:.3e} < -{tol:.3e}")
    return DensityMatrix(matrix=mat, tolerance=float(tol))


def validate_unitary(m, tol: float = DEFAULT_TOL) -> UnitaryMatrix:
    """Validate unitarity: max-norm of (U^dag U - I) must be within tol."""
    if tol < 0:
        raise ValidationError(f"tolerance must be nonnegative, got {tol!r}")
    mat = complex_matrix(m)
    defect = float(np.max(np.abs(mat.conj().T @ mat - np.eye(mat.shape[0]))))
    if defect > tol:
        raise NotUnitaryError(f"unitarity defect {defect:.3e} > tolerance {tol:.3e}")
    return UnitaryMatrix(matrix=mat, tolerance=float(tol))


def pure_state_density(psi, tol: float = DEFAULT_TOL) -> DensityMatrix:
    """Normalized projector |psi><psi| / <psi|psi> for a nonzero vector."""
    v = np.asarray(psi, dtype=np.complex128)
    if v.ndim != 1 or v.size < 1:
        raise ValidationError(f"state vector must be one-dimensional, got shape {v.shape}")
    if not np.all(np.isfinite(v)):
        raise ValidationError("state vector entries must all be finite")
    norm_sq = float(np.vdot(v, v).real)
    if norm_sq == 0.0:
        raise ZeroVectorError("cannot project on the zero vector")
    return validate_density(np.outer(v, v.conj()) / norm_sq, tol=tol)


def matrix_to_json_dict(m) -> dict:
    """Serialize to the matrix literal schema {"dim", "re", "im"} (row-major)."""
    mat = complex_matrix(m)
    return {
        "dim": int(mat.shape[0]),
        "re": mat.real.tolist(),
        "im": mat.imag.tolist(),
    }


def matrix_from_json_dict(obj) -> np.ndarray:
    """Parse the matrix literal schema back into a complex matrix."""
    if not isinstance(obj, dict):
        raise ValidationError("matrix literal must be a JSON object")
    missing = {"dim", "re", "im"} - set(obj)
    if missing:
        raise ValidationError(f"matrix literal is missing keys: {sorted(missing)}")
    dim = obj["dim"]
    if not isinstance(dim, int) or dim < 1:
        raise ValidationError(f"matrix literal 'dim' must be a positive integer, got {dim!r}")
    try:
        re = np.array(obj["re"], dtype=np.float64)
        im = np.array(obj["im"], dtype=np.float64)
    except (TypeError, ValueError) as exc:
        raise ValidationError(f"matrix literal arrays are not numeric: {exc}") from exc
    if re.shape != (dim, dim) or im.shape != (dim, dim):
        raise ValidationError(
            f"matrix literal arrays must both be {dim}x{dim}, got {re.shape} and {im.shape}"
        )
    return complex_matrix(re + 1j * im)


def load_matrix_file(path) -> np.ndarray:
    """Read a matrix literal JSON file."""
    with open(path, "r", encoding="utf-8") as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValidationError(f"{path}: not valid JSON: {exc}") from exc
    return matrix_from_json_dict(obj)


def dump_matrix_file(path, m) -> None:
    """Write a matrix literal JSON file (floats round-trip exactly)."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        json.dump(matrix_to_json_dict(m), fh, indent=1)
        fh.write("\n")
