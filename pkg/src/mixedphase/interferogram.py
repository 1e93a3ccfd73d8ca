"""Two-beam interference patterns and the Hermitian eigensolver behind them.

With the beam state rho = sum_k p_k |k><k| and the arm unitary U, each
eigenchannel contributes a cosine fringe with amplitude a_k and offset
theta_k taken from <k|U|k> = a_k e^{i theta_k}. The scanned pattern

    I(chi) = 1 + sum_k p_k a_k cos(chi - theta_k) = 1 + c cos(chi - phi)

is normalized to unit mean, so the fringe contrast equals c = |Tr(U rho)|
and the maximum sits at chi = phi = arg Tr(U rho).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import (
    DimensionMismatchError,
    NoConvergenceError,
    NotHermitianError,
    ROutOfRangeError,
)
from .phase import DEFAULT_EPSILON, InterferencePhase, interference_functional, spin_half_functional, wrap_angle
from .qmatrix import DensityMatrix, UnitaryMatrix

_OFFDIAG_TOL = 1e-12
_MAX_SWEEPS = 100
_HERMITICITY_TOL = 1e-9


def hermitian_eigen(m) -> tuple[np.ndarray, np.ndarray]:
    """Diagonalize a Hermitian matrix by cyclic Jacobi rotations.

    Returns (eigenvalues, eigenvectors) with eigenvalues sorted descending
    and eigenvectors as the matching orthonormal columns. Sweeps run until
    every off-diagonal magnitude is below 1e-12; more than 100 sweeps
    raises NoConvergenceError.
    """
    a = np.array(m, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionMismatchError(f"expected a square matrix, got shape {a.shape}")
    defect = float(np.max(np.abs(a - a.conj().T)))
    if defect > _HERMITICITY_TOL:
        raise NotHermitianError(f"hermiticity defect {defect:.3e} > {_HERMITICITY_TOL:.3e}")
    a = (a + a.conj().T) / 2.0
    n = a.shape[0]
    v = np.eye(n, dtype=np.complex128)

    for _ in range(_MAX_SWEEPS):
        off = _max_offdiag(a)
        if off < _OFFDIAG_TOL:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                g = a[p, q]
                abs_g = abs(g)
                if abs_g == 0.0:
                    continue
                # phase out the pivot, then the classic real rotation angle
                f = g / abs_g
                tau = (a[q, q].real - a[p, p].real) / (2.0 * abs_g)
                t = math.copysign(1.0, tau) / (abs(tau) + math.hypot(1.0, tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                rot = np.array([[c, s], [-s * f.conjugate(), c * f.conjugate()]])
                a[:, [p, q]] = a[:, [p, q]] @ rot
                a[[p, q], :] = rot.conj().T @ a[[p, q], :]
                v[:, [p, q]] = v[:, [p, q]] @ rot
                a[p, q] = 0.0
                a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real
    else:
        raise NoConvergenceError(
            f"Jacobi sweeps did not reach off-diagonal {_OFFDIAG_TOL:.0e} "
            f"within {_MAX_SWEEPS} sweeps (left at {_max_offdiag(a):.3e})"
        )

    eigenvalues = np.real(np.diag(a)).copy()
    order = np.argsort(-eigenvalues, kind="stable")
    eigenvalues = eigenvalues[order]
    vectors = v[:, order]
    eigenvalues.setflags(write=False)
    vectors.setflags(write=False)
    return eigenvalues, vectors


def _max_offdiag(a: np.ndarray) -> float:
    if a.shape[0] == 1:
        return 0.0
    mask = ~np.eye(a.shape[0], dtype=bool)
    return float(np.max(np.abs(a[mask])))


class Channel(NamedTuple):
    """One eigenchannel of the beam: weight, fringe amplitude, fringe offset."""

    weight: float
    visibility: float
    phase: float


@dataclass(frozen=True)
class Interferogram:
    """Sampled intensity I(chi) plus its per-eigenchannel decomposition."""

    chi: np.ndarray
    intensity: np.ndarray
    channels: tuple[Channel, ...]
    source: InterferencePhase


@dataclass(frozen=True)
class PeakShift:
    """Fringe maximum position and contrast extracted from a pattern.

    chi_star is NaN when the contrast is below epsilon: a flat pattern
    carries no phase information.
    """

    chi_star: float
    contrast: float
    indeterminate: bool


def _chi_grid(chi_samples: int) -> np.ndarray:
    if chi_samples < 8:
        raise ValueError(f"need at least 8 reference-phase samples, got {chi_samples}")
    return -math.pi + 2.0 * math.pi * np.arange(chi_samples) / chi_samples


def _pattern_from_channels(chi: np.ndarray, channels) -> np.ndarray:
    intensity = np.ones_like(chi)
    for weight, vis, theta in channels:
        intensity = intensity + weight * vis * np.cos(chi - theta)
    return intensity


def synthesize_pattern(
    u: UnitaryMatrix,
    rho: DensityMatrix,
    chi_samples: int = 1024,
    epsilon: float = DEFAULT_EPSILON,
) -> Interferogram:
    """Synthesize the two-beam pattern for arm unitary U and beam state rho.

    The reference arm carries the scanned phase chi on a uniform grid over
    [-pi, pi). Channels are reported sorted by descending weight, ties by
    ascending offset. Eigenvalues of rho that dip marginally below zero
    (within its validation slack) are clamped to zero.
    """
    if u.dim != rho.dim:
        raise DimensionMismatchError(f"dimension mismatch: U is {u.dim}, rho is {rho.dim}")
    chi = _chi_grid(chi_samples)
    weights, vectors = hermitian_eigen(rho.matrix)
    weights = np.maximum(weights, 0.0)
    channels = []
    for k in range(rho.dim):
        vk = vectors[:, k]
        amp = complex(np.vdot(vk, u.matrix @ vk))
        vis = abs(amp)
        theta = wrap_angle(math.atan2(amp.imag, amp.real)) if vis > 0.0 else 0.0
        channels.append(Channel(float(weights[k]), vis, theta))
    channels.sort(key=lambda ch: (-ch.weight, ch.phase))
    intensity = _pattern_from_channels(chi, channels)
    source = interference_functional(u, rho, epsilon)
    chi.setflags(write=False)
    intensity.setflags(write=False)
    return Interferogram(chi=chi, intensity=intensity, channels=tuple(channels), source=source)


def _parabolic_vertex(y: np.ndarray, i: int, h: float) -> tuple[float, float]:
    """Refine a discrete extremum on a periodic grid; returns (offset, value)."""
    n = len(y)
    y0 = y[i]
    ym = y[(i - 1) % n]
    yp = y[(i + 1) % n]
    d2 = ym - 2.0 * y0 + yp
    if d2 == 0.0:
        return 0.0, float(y0)
    offset = 0.5 * h * (ym - yp) / d2
    value = y0 - 0.125 * (ym - yp) ** 2 / d2
    return float(offset), float(value)


def peak_shift(pattern: Interferogram, epsilon: float = DEFAULT_EPSILON) -> PeakShift:
    """Locate the fringe maximum and measure the contrast of a pattern.

    Both extrema are refined by three-point quadratic interpolation on the
    periodic grid (the exact-cosine pattern makes that second-order step
    essentially exact). Discrete ties resolve to the smallest chi.
    """
    y = pattern.intensity
    n = len(y)
    h = 2.0 * math.pi / n
    i_max = int(np.argmax(y))
    i_min = int(np.argmin(y))
    off_max, val_max = _parabolic_vertex(y, i_max, h)
    _, val_min = _parabolic_vertex(y, i_min, h)
    denom = val_max + val_min
    contrast = (val_max - val_min) / denom if denom != 0.0 else 0.0
    contrast = max(contrast, 0.0)
    if contrast <= epsilon:
        return PeakShift(chi_star=float("nan"), contrast=contrast, indeterminate=True)
    chi_star = wrap_angle(float(pattern.chi[i_max]) + off_max)
    return PeakShift(chi_star=chi_star, contrast=contrast, indeterminate=False)


def counter_moving_patterns(
    r: float,
    deltas,
    chi_samples: int = 1024,
    epsilon: float = DEFAULT_EPSILON,
) -> list[Interferogram]:
    """Spin-1/2 patterns showing the two counter-moving eigenchannel fringes.

    For each delta the |z+> channel fringe sits at +delta and the |z->
    fringe at -delta (both wrapped), with weights (1+r)/2 and (1-r)/2; at
    delta near half-odd multiples of pi and r = 0 the two fringes cancel
    into uniform illumination. Channel order is fixed as (plus, minus).
    """
    if not (-1.0 <= r <= 1.0):
        raise ROutOfRangeError(f"polarization r must lie in [-1, 1], got {r!r}")
    chi = _chi_grid(chi_samples)
    chi.setflags(write=False)
    patterns = []
    for delta in deltas:
        channels = (
            Channel((1.0 + r) / 2.0, 1.0, wrap_angle(delta)),
            Channel((1.0 - r) / 2.0, 1.0, wrap_angle(-delta)),
        )
        intensity = _pattern_from_channels(chi, channels)
        intensity.setflags(write=False)
        patterns.append(
            Interferogram(
                chi=chi,
                intensity=intensity,
                channels=channels,
                source=spin_half_functional(r, delta, epsilon),
            )
        )
    return patterns
