"""Independent oracles and random fixtures shared across the test suite.

Everything here deliberately avoids the code paths it is used to check:
matrix products come from a naive triple loop, circuit phases from dense
uniform sampling with no adaptive refinement.
"""

from __future__ import annotations

import numpy as np


def triple_loop_matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Naive O(n^3) matrix product, the oracle for mat_mul."""
    n = a.shape[0]
    out = np.zeros((n, n), dtype=np.complex128)
    for i in range(n):
        for j in range(n):
            acc = 0.0 + 0.0j
            for k in range(n):
                acc += a[i, k] * b[k, j]
            out[i, j] = acc
    return out


def dense_total_phase(values: np.ndarray) -> float:
    """Accumulated phase of a densely sampled complex walk (no refinement)."""
    increments = np.angle(values[1:] / values[:-1])
    return float(np.sum(increments))


def dense_circle_winding(family, center, radius: float, n: int = 1_000_000) -> int:
    """Brute-force winding of a CCW circle from n uniform samples."""
    t = np.linspace(0.0, 2.0 * np.pi, n + 1)
    r = center[0] + radius * np.cos(t)
    d = center[1] + radius * np.sin(t)
    total = dense_total_phase(family.value_array(r, d))
    return int(round(total / (2.0 * np.pi)))


def dense_polyline_winding(family, corners, n: int = 1_000_000) -> int:
    """Brute-force winding of a closed polyline, sampled uniformly by arclength."""
    pts = np.asarray(corners, dtype=np.float64)
    lengths = np.linalg.norm(np.diff(pts, axis=0), axis=1)
    perimeter = float(np.sum(lengths))
    segments = []
    for i, length in enumerate(lengths):
        m = max(2, int(round(n * length / perimeter)))
        frac = np.linspace(0.0, 1.0, m, endpoint=False)[:, None]
        segments.append(pts[i] + frac * (pts[i + 1] - pts[i]))
    walk = np.vstack(segments + [pts[-1:]])
    total = dense_total_phase(family.value_array(walk[:, 0], walk[:, 1]))
    return int(round(total / (2.0 * np.pi)))


def random_unitary(rng: np.random.Generator, n: int) -> np.ndarray:
    """Haar-ish random unitary from the QR decomposition of a Gaussian."""
    g = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    q, r = np.linalg.qr(g)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def random_density_matrix(rng: np.random.Generator, n: int) -> np.ndarray:
    """Random full-rank density matrix G G^dag / Tr(G G^dag)."""
    g = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    m = g @ g.conj().T
    return m / np.trace(m).real


def random_hermitian(rng: np.random.Generator, n: int) -> np.ndarray:
    g = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return (g + g.conj().T) / 2.0
