"""Continuous phase along parameter paths, circuit windings, zero scans.

A path is a polyline of (r, delta) samples together with the family that
maps each point to the complex interference value z. Tracking accumulates
principal-branch increments arg(z_{k+1}/z_k) and bisects any segment whose
increment reaches pi/2, so the unwrapped phase never suffers a branch
ambiguity; a sample whose visibility falls to the indeterminacy threshold
aborts the walk, because no continuous phase exists across a zero.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    NotClosedError,
    RadiusOutOfDomainError,
    ResidualTooLargeError,
    RefinementExhaustedError,
    ROutOfRangeError,
    SingularityOnPathError,
    ValidationError,
)
from .phase import (
    DEFAULT_EPSILON,
    SpinHalfPoint,
    interference_functional,
    linear_weight_family,
    spin_magnetic_numbers,
)

_TWO_PI = 2.0 * math.pi
_HALF_PI = math.pi / 2.0

DEFAULT_MAX_DEPTH = 40


class PathFamily:
    """Maps parameter-plane points (r, delta) to the interference value z."""

    tag = "abstract"

    def value(self, r: float, delta: float) -> complex:
        raise NotImplementedError

    def value_array(self, r, delta) -> np.ndarray:
        """Vectorized evaluation; the default falls back to a scalar loop."""
        r = np.asarray(r, dtype=np.float64)
        delta = np.asarray(delta, dtype=np.float64)
        r_b, d_b = np.broadcast_arrays(r, delta)
        out = np.empty(r_b.shape, dtype=np.complex128)
        flat_r, flat_d, flat_o = r_b.ravel(), d_b.ravel(), out.ravel()
        for i in range(flat_o.size):
            flat_o[i] = self.value(float(flat_r[i]), float(flat_d[i]))
        return out


class SpinHalfFamily(PathFamily):
    """z = cos(delta) + i r sin(delta), valid for |r| <= 1."""

    tag = "spin-half"

    def value(self, r: float, delta: float) -> complex:
        if not (-1.0 <= r <= 1.0):
            raise ROutOfRangeError(f"polarization r must lie in [-1, 1], got {r!r}")
        return complex(math.cos(delta), r * math.sin(delta))

    def value_array(self, r, delta) -> np.ndarray:
        r = np.asarray(r, dtype=np.float64)
        if np.any(np.abs(r) > 1.0):
            raise ROutOfRangeError("polarization r must lie in [-1, 1] everywhere")
        delta = np.asarray(delta, dtype=np.float64)
        return np.cos(delta) + 1j * r * np.sin(delta)


class WeightRayFamily(PathFamily):
    """Spin-j family along the ray through uniform weights.

    The weights at polarization r interpolate p_m(r) = u + r (w_m - u)
    with u = 1/(2j+1) and anchor weights w_m = p_m(1). Anchoring at the
    linear weights (1 + m/j)/(2j+1) reproduces linear_weight_family(j, r)
    for every r. Points where some p_m(r) < 0 are rejected as out of range.
    """

    def __init__(self, j: float, anchor_weights):
        self.j = float(j)
        self.magnetic_numbers = spin_magnetic_numbers(j)
        w = np.asarray(anchor_weights, dtype=np.float64)
        if w.shape != self.magnetic_numbers.shape:
            raise ValidationError(
                f"spin {j!r} needs {self.magnetic_numbers.size} weights, got {w.size}"
            )
        if np.any(w < 0.0) or abs(float(w.sum()) - 1.0) > 1e-12:
            raise ValidationError("anchor weights must be nonnegative and sum to 1")
        self.anchor_weights = w
        self.uniform = 1.0 / (2.0 * self.j + 1.0)
        self.tag = f"spin-system(j={self.j})"

    def _weights(self, r: float) -> np.ndarray:
        p = self.uniform + r * (self.anchor_weights - self.uniform)
        if np.any(p < -1e-12):
            raise ROutOfRangeError(
                f"polarization r={r!r} drives a level weight negative for this family"
            )
        return np.maximum(p, 0.0)

    def value(self, r: float, delta: float) -> complex:
        return complex(np.sum(self._weights(r) * np.exp(1j * self.magnetic_numbers * delta)))

    def value_array(self, r, delta) -> np.ndarray:
        r = np.asarray(r, dtype=np.float64)
        delta = np.asarray(delta, dtype=np.float64)
        r_b, d_b = np.broadcast_arrays(r, delta)
        dev = self.anchor_weights - self.uniform
        p = self.uniform + r_b[..., None] * dev  # (..., 2j+1)
        if np.any(p < -1e-12):
            raise ROutOfRangeError("polarization drives a level weight negative somewhere")
        phases = np.exp(1j * d_b[..., None] * self.magnetic_numbers)
        return np.sum(np.maximum(p, 0.0) * phases, axis=-1)


def linear_spin_family(j: float) -> WeightRayFamily:
    """The canonical spin-j polarization family p_m(r) = (1 + r m/j)/(2j+1)."""
    return WeightRayFamily(j, linear_weight_family(j, 1.0).weights)


class CallableFamily(PathFamily):
    """Wrap an arbitrary (r, delta) -> complex adapter as a path family."""

    def __init__(self, fn, tag: str = "explicit"):
        self._fn = fn
        self.tag = tag

    def value(self, r: float, delta: float) -> complex:
        return complex(self._fn(r, delta))


def matrix_pair_family(pair_fn, epsilon: float = DEFAULT_EPSILON, tag: str = "explicit") -> CallableFamily:
    """Family adapter for paths given as (UnitaryMatrix, DensityMatrix) pairs.

    `pair_fn(r, delta)` must produce the validated pair at each point; the
    family evaluates the interference functional on it.
    """

    def fn(r: float, delta: float) -> complex:
        u, rho = pair_fn(r, delta)
        return interference_functional(u, rho, epsilon).z

    return CallableFamily(fn, tag=tag)


_spin_half = SpinHalfFamily()


@dataclass(frozen=True)
class ParameterPath:
    """Ordered (r, delta) samples plus the family that evaluates them."""

    points: np.ndarray
    closed: bool = False
    family: PathFamily = field(default_factory=lambda: _spin_half)

    def __post_init__(self):
        pts = np.array(
            [(p.r, p.delta) if isinstance(p, SpinHalfPoint) else tuple(p) for p in self.points],
            dtype=np.float64,
        )
        if pts.ndim != 2 or pts.shape[1] != 2:
            raise ValidationError(f"path points must be (r, delta) pairs, got shape {pts.shape}")
        if not np.all(np.isfinite(pts)):
            raise ValidationError("path points must all be finite")
        n = pts.shape[0]
        if self.closed:
            if n < 3:
                raise ValidationError(f"a closed path needs at least 3 points, got {n}")
            gap = np.max(np.abs(pts[0] - pts[-1]))
            if gap > 1e-12:
                raise NotClosedError(
                    f"closed path endpoints differ by {gap:.3e} > 1e-12; close it explicitly"
                )
        elif n < 2:
            raise ValidationError(f"an open path needs at least 2 points, got {n}")
        pts.setflags(write=False)
        object.__setattr__(self, "points", pts)

    def __len__(self) -> int:
        return self.points.shape[0]


@dataclass(frozen=True)
class PhaseTrace:
    """Accumulated continuous phase along a path.

    samples holds rows (path parameter in [0, 1], accumulated phase,
    visibility); consecutive accumulated phases differ by less than pi/2
    by construction.
    """

    samples: np.ndarray
    total_phase: float
    min_visibility: float
    refinement_depth_used: int


@dataclass(frozen=True)
class WindingReport:
    """Total circuit phase and its integer winding."""

    total_phase: float
    winding: int
    residual: float
    min_visibility: float


@dataclass(frozen=True)
class SingularityRecord:
    """A located, classified phase singularity."""

    location: SpinHalfPoint
    winding: int
    probe_radius: float
    min_visibility_on_probe: float


@dataclass(frozen=True)
class ProbeFailure:
    """A visibility zero whose winding probe could not be completed."""

    location: SpinHalfPoint
    probe_radius: float
    error: str


def track_phase(
    path: ParameterPath,
    epsilon: float = DEFAULT_EPSILON,
    max_depth: int = DEFAULT_MAX_DEPTH,
) -> PhaseTrace:
    """Accumulate the continuous phase along a path.

    Any segment whose wrapped increment reaches pi/2 is bisected (linearly
    in the parameter plane) up to max_depth times; every caller-supplied
    segment is additionally bisected once unconditionally, so a full turn
    hiding inside a single sparse segment still trips the pi/2 rule instead
    of aliasing away. Raises SingularityOnPathError if any evaluated sample
    has visibility <= epsilon, RefinementExhaustedError if bisection runs
    out of depth.
    """
    if epsilon <= 0.0:
        raise ValueError(f"epsilon must be positive, got {epsilon!r}")
    if max_depth < 1:
        raise ValueError(f"max_depth must be at least 1, got {max_depth!r}")
    fam = path.family
    pts = path.points
    n = pts.shape[0]
    n_seg = n - 1

    def evaluate(point) -> complex:
        z = complex(fam.value(float(point[0]), float(point[1])))
        if abs(z) <= epsilon:
            raise SingularityOnPathError(float(point[0]), float(point[1]), abs(z), epsilon)
        return z

    rows = []
    state = {"acc": 0.0, "depth": 0}

    def advance(p0, z0, t0, p1, z1, t1, depth_left, force=False):
        increment = cmath.phase(z1 / z0)
        if not force and abs(increment) < _HALF_PI:
            state["acc"] += increment
            rows.append((t1, state["acc"], abs(z1)))
            return
        if depth_left == 0:
            raise RefinementExhaustedError(t0, t1, increment)
        pm = (p0 + p1) / 2.0
        tm = (t0 + t1) / 2.0
        zm = evaluate(pm)
        state["depth"] = max(state["depth"], max_depth - depth_left + 1)
        advance(p0, z0, t0, pm, zm, tm, depth_left - 1)
        advance(pm, zm, tm, p1, z1, t1, depth_left - 1)

    z_prev = evaluate(pts[0])
    rows.append((0.0, 0.0, abs(z_prev)))
    t_prev = 0.0
    for i in range(n_seg):
        t_next = (i + 1) / n_seg
        z_next = evaluate(pts[i + 1])
        advance(pts[i], z_prev, t_prev, pts[i + 1], z_next, t_next, max_depth, force=True)
        z_prev, t_prev = z_next, t_next

    samples = np.array(rows, dtype=np.float64)
    samples.setflags(write=False)
    return PhaseTrace(
        samples=samples,
        total_phase=float(samples[-1, 1]),
        min_visibility=float(np.min(samples[:, 2])),
        refinement_depth_used=state["depth"],
    )


def winding_number(
    path: ParameterPath,
    epsilon: float = DEFAULT_EPSILON,
    max_depth: int = DEFAULT_MAX_DEPTH,
) -> WindingReport:
    """Integer winding of the phase around a closed circuit.

    Counterclockwise circuits in the (r, delta) plane (r horizontal, delta
    vertical) around a simple zero give winding +1.
    """
    if not path.closed:
        raise NotClosedError("winding numbers are defined for closed paths only")
    trace = track_phase(path, epsilon=epsilon, max_depth=max_depth)
    turns = trace.total_phase / _TWO_PI
    winding = round(turns)
    residual = abs(turns - winding)
    if residual > 0.01:
        raise ResidualTooLargeError(trace.total_phase, residual)
    return WindingReport(
        total_phase=trace.total_phase,
        winding=int(winding),
        residual=residual,
        min_visibility=trace.min_visibility,
    )


def sweep_path(
    r: float,
    delta_from: float,
    delta_to: float,
    samples: int,
    family: PathFamily | None = None,
) -> ParameterPath:
    """Open path at fixed polarization r, delta swept uniformly."""
    if samples < 2:
        raise ValueError(f"a sweep needs at least 2 samples, got {samples}")
    deltas = np.linspace(delta_from, delta_to, samples)
    pts = np.column_stack([np.full(samples, float(r)), deltas])
    return ParameterPath(points=pts, closed=False, family=family or _spin_half)


def circle_path(
    center,
    radius: float,
    samples: int = 256,
    orientation: str = "ccw",
    family: PathFamily | None = None,
) -> ParameterPath:
    """Closed circular circuit in the (r, delta) plane.

    The first point is repeated verbatim at the end. `orientation` is
    "ccw" or "cw"; the clockwise circle is the reversed point order of the
    counterclockwise one. The circle must stay inside r in [-1, 1].
    """
    if isinstance(center, SpinHalfPoint):
        c_r, c_d = center.r, center.delta
    else:
        c_r, c_d = float(center[0]), float(center[1])
    if radius <= 0.0:
        raise ValueError(f"radius must be positive, got {radius!r}")
    if samples < 16:
        raise ValueError(f"a circle needs at least 16 samples, got {samples}")
    if abs(c_r) + radius > 1.0:
        raise RadiusOutOfDomainError(
            f"circle of radius {radius!r} at r={c_r!r} leaves the polarization domain [-1, 1]"
        )
    if orientation not in ("ccw", "cw"):
        raise ValueError(f"orientation must be 'ccw' or 'cw', got {orientation!r}")
    angles = _TWO_PI * np.arange(samples) / samples
    pts = np.column_stack([c_r + radius * np.cos(angles), c_d + radius * np.sin(angles)])
    pts = np.vstack([pts, pts[:1]])
    if orientation == "cw":
        pts = pts[::-1]
    return ParameterPath(points=pts, closed=True, family=family or _spin_half)


def phase_shift_curves(
    r_values,
    delta_from: float = 0.0,
    delta_to: float = math.pi,
    samples: int = 256,
    epsilon: float = DEFAULT_EPSILON,
    max_depth: int = DEFAULT_MAX_DEPTH,
    family: PathFamily | None = None,
) -> list[tuple[float, float, float, float]]:
    """Sweep the continuous phase over delta for each polarization value.

    Returns long-format rows (r, delta, unwrapped_phase, visibility) at the
    requested sweep samples, grouped by r in input order. Internal
    refinement points are used for unwrapping but not reported.
    """
    rows: list[tuple[float, float, float, float]] = []
    for r in r_values:
        path = sweep_path(r, delta_from, delta_to, samples, family=family)
        trace = track_phase(path, epsilon=epsilon, max_depth=max_depth)
        rows.extend(_rows_at_requested_samples(float(r), path, trace))
    return rows


def _rows_at_requested_samples(r, path, trace):
    # original sample parameters i/(n-1) appear verbatim in the trace
    n_seg = len(path) - 1
    wanted = [i / n_seg for i in range(len(path))]
    by_t = {float(row[0]): (float(row[1]), float(row[2])) for row in trace.samples}
    rows = []
    for i, t in enumerate(wanted):
        acc, vis = by_t[t]
        rows.append((r, float(path.points[i, 1]), acc, vis))
    return rows


_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


def _golden_min(f, a: float, b: float, tol: float) -> float:
    """Golden-section minimum of a unimodal function on [a, b]."""
    x1 = b - _GOLDEN * (b - a)
    x2 = a + _GOLDEN * (b - a)
    f1, f2 = f(x1), f(x2)
    while (b - a) > tol:
        if f1 < f2:
            b, x2, f2 = x2, x1, f1
            x1 = b - _GOLDEN * (b - a)
            f1 = f(x1)
        else:
            a, x1, f1 = x1, x2, f2
            x2 = a + _GOLDEN * (b - a)
            f2 = f(x2)
    return (a + b) / 2.0


def _refine_zero(fam, r0, d0, dr, dd, r_bounds, d_bounds, tol=1e-8, rounds=60):
    r, d = r0, d0
    for _ in range(rounds):
        a = max(r_bounds[0], r - dr)
        b = min(r_bounds[1], r + dr)
        r_new = _golden_min(lambda x: abs(fam.value(x, d)), a, b, tol) if b > a else r
        a = max(d_bounds[0], d - dd)
        b = min(d_bounds[1], d + dd)
        d_new = _golden_min(lambda x: abs(fam.value(r_new, x)), a, b, tol) if b > a else d
        moved = max(abs(r_new - r), abs(d_new - d))
        r, d = r_new, d_new
        if moved < 1e-9:
            break
    return r, d


def scan_singularities(
    r_range: tuple[float, float] = (-1.0, 1.0),
    delta_range: tuple[float, float] = (0.0, _TWO_PI),
    grid_nr: int = 201,
    grid_nd: int = 401,
    family: PathFamily | None = None,
    zero_threshold: float = 0.05,
    probe_radius: float | None = None,
    probe_samples: int = 256,
    epsilon: float = DEFAULT_EPSILON,
    max_depth: int = DEFAULT_MAX_DEPTH,
) -> tuple[list[SingularityRecord], list[ProbeFailure]]:
    """Locate and classify phase singularities in a rectangle of the plane.

    Grid local minima of visibility below zero_threshold are refined by
    alternating golden-section descent to sub-grid accuracy (1e-6 or
    better per coordinate), then classified by the winding of a small CCW
    probe circle; minima that probe to winding 0 are discarded as
    non-singular dips. Records come back sorted by delta, then r.

    The probe must stay local: probe_radius may not exceed twice the
    coarser grid spacing (half the spacing times four), and defaults to
    1.5 times it. Probes are shrunk, by at most half, to stay inside
    r in [-1, 1]; probes that fail anyway are reported as ProbeFailure
    entries alongside the records.
    """
    if grid_nr < 8 or grid_nd < 8:
        raise ValueError(f"grid must be at least 8x8, got {grid_nr}x{grid_nd}")
    r_lo, r_hi = float(r_range[0]), float(r_range[1])
    d_lo, d_hi = float(delta_range[0]), float(delta_range[1])
    if not (r_lo < r_hi and d_lo < d_hi):
        raise ValueError("scan region must have positive extent in both coordinates")
    fam = family or _spin_half
    rs = np.linspace(r_lo, r_hi, grid_nr)
    ds = np.linspace(d_lo, d_hi, grid_nd)
    dr = rs[1] - rs[0]
    dd = ds[1] - ds[0]
    spacing = max(dr, dd)
    if probe_radius is None:
        probe_radius = 1.5 * spacing
    if probe_radius <= 0.0 or probe_radius > 2.0 * spacing:
        raise ValueError(
            f"probe_radius must be in (0, {2.0 * spacing:.6g}] for this grid, got {probe_radius!r}"
        )

    grid_r, grid_d = np.meshgrid(rs, ds, indexing="ij")
    vis = np.abs(fam.value_array(grid_r, grid_d))

    padded = np.full((grid_nr + 2, grid_nd + 2), np.inf)
    padded[1:-1, 1:-1] = vis
    is_min = vis < zero_threshold
    for si in (-1, 0, 1):
        for sj in (-1, 0, 1):
            if si == 0 and sj == 0:
                continue
            is_min &= vis <= padded[1 + si : grid_nr + 1 + si, 1 + sj : grid_nd + 1 + sj]

    r_clip = (max(r_lo, -1.0), min(r_hi, 1.0))
    locations: list[tuple[float, float]] = []
    for i, j in np.argwhere(is_min):
        r_star, d_star = _refine_zero(
            fam, float(rs[i]), float(ds[j]), dr, dd, r_clip, (d_lo, d_hi)
        )
        if any(abs(r_star - r) <= spacing / 2 and abs(d_star - d) <= spacing / 2 for r, d in locations):
            continue
        locations.append((r_star, d_star))

    records: list[SingularityRecord] = []
    failures: list[ProbeFailure] = []
    for r_star, d_star in locations:
        radius = probe_radius
        fit = 1.0 - abs(r_star)
        if radius > fit:
            if fit < radius / 2.0:
                failures.append(
                    ProbeFailure(
                        location=SpinHalfPoint(r_star, d_star),
                        probe_radius=radius,
                        error="ProbeFailed: probe circle cannot fit inside r in [-1, 1]",
                    )
                )
                continue
            radius = fit
        probe = circle_path((r_star, d_star), radius, probe_samples, "ccw", family=fam)
        try:
            report = winding_number(probe, epsilon=epsilon, max_depth=max_depth)
        except (SingularityOnPathError, RefinementExhaustedError, ResidualTooLargeError) as exc:
            failures.append(
                ProbeFailure(
                    location=SpinHalfPoint(r_star, d_star),
                    probe_radius=radius,
                    error=f"ProbeFailed: {type(exc).__name__}: {exc}",
                )
            )
            continue
        if report.winding == 0:
            continue
        records.append(
            SingularityRecord(
                location=SpinHalfPoint(r_star, d_star),
                winding=report.winding,
                probe_radius=radius,
                min_visibility_on_probe=report.min_visibility,
            )
        )
    records.sort(key=lambda rec: (rec.location.delta, rec.location.r))
    failures.sort(key=lambda rec: (rec.location.delta, rec.location.r))
    return records, failures
