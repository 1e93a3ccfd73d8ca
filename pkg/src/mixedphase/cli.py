"""Command-line surface with deterministic CSV/JSON output.

Exit codes: 0 for success (a physically indeterminate phase is a success),
2 for input or validation errors, 3 for computation errors such as a
singularity on the tracked path. Numbers are printed with 10 significant
digits; identical invocations produce byte-identical output.
"""

from __future__ import annotations

import argparse
import math
import sys

from .errors import ComputationError, ValidationError
from .interferogram import counter_moving_patterns, peak_shift, synthesize_pattern
from .phase import (
    DEFAULT_EPSILON,
    interference_functional,
    spin_half_density,
    spin_half_unitary,
)
from .qmatrix import DEFAULT_TOL, dump_matrix_file, load_matrix_file, validate_density, validate_unitary
from .topology import (
    WeightRayFamily,
    circle_path,
    linear_spin_family,
    phase_shift_curves,
    scan_singularities,
    winding_number,
)

MAX_CLI_DIM = 64


def fmt(x: float) -> str:
    """Format a number with 10 significant digits, lowercase exponent."""
    return format(float(x), ".10g")


def _fmt_json_value(value) -> str:
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        if math.isnan(value):
            return "null"
        return fmt(value)
    return '"' + str(value) + '"'


def _json_record(pairs) -> str:
    return "{" + ", ".join(f'"{key}": {_fmt_json_value(val)}' for key, val in pairs) + "}"


class _OutputFile:
    """stdout when path is '-', a real file otherwise."""

    def __init__(self, path: str):
        self.path = path

    def __enter__(self):
        if self.path == "-":
            self._fh = None
            return sys.stdout
        self._fh = open(self.path, "w", encoding="utf-8", newline="\n")
        return self._fh

    def __exit__(self, *exc_info):
        if self._fh is not None:
            self._fh.close()
        return False


def _parse_floats(text: str, flag: str) -> list[float]:
    try:
        values = [float(tok) for tok in text.split(",") if tok.strip() != ""]
    except ValueError as exc:
        raise ValidationError(f"{flag} expects comma-separated numbers, got {text!r}") from exc
    if not values:
        raise ValidationError(f"{flag} must not be empty")
    return values


def _parse_pair(text: str, flag: str) -> tuple[float, float]:
    values = _parse_floats(text, flag)
    if len(values) != 2:
        raise ValidationError(f"{flag} expects exactly two numbers, got {text!r}")
    return values[0], values[1]


def _parse_grid(text: str) -> tuple[int, int]:
    try:
        parts = [int(tok) for tok in text.split(",")]
    except ValueError as exc:
        raise ValidationError(f"--grid expects two integers, got {text!r}") from exc
    if len(parts) != 2:
        raise ValidationError(f"--grid expects two integers, got {text!r}")
    return parts[0], parts[1]


def _load_pair(args):
    rho_raw = load_matrix_file(args.rho_file)
    u_raw = load_matrix_file(args.u_file)
    if rho_raw.shape[0] > MAX_CLI_DIM or u_raw.shape[0] > MAX_CLI_DIM:
        raise ValidationError(f"the CLI caps matrix dimension at {MAX_CLI_DIM}")
    rho = validate_density(rho_raw, tol=args.tol)
    u = validate_unitary(u_raw, tol=args.tol)
    return u, rho


def _spin_half_mode(args, parser) -> bool:
    has_point = args.r is not None or args.delta is not None
    has_files = args.rho_file is not None or args.u_file is not None
    if has_point and has_files:
        parser.error("give either --r/--delta or --rho-file/--u-file, not both")
    if has_point:
        if args.r is None or args.delta is None:
            parser.error("--r and --delta must be given together")
        return True
    if args.rho_file is None or args.u_file is None:
        parser.error("--rho-file and --u-file must be given together")
    return False


def cmd_phase(args, parser) -> int:
    if _spin_half_mode(args, parser):
        rho = spin_half_density(args.r)
        u = spin_half_unitary(args.delta)
    else:
        u, rho = _load_pair(args)
    if args.dump is not None:
        dump_matrix_file(f"{args.dump}-rho.json", rho.matrix)
        dump_matrix_file(f"{args.dump}-u.json", u.matrix)
    result = interference_functional(u, rho, args.epsilon)
    fields = [
        ("z_re", result.z.real),
        ("z_im", result.z.imag),
        ("visibility", result.visibility),
        ("phase", None if result.indeterminate else result.phase),
        ("indeterminate", result.indeterminate),
    ]
    if args.format == "json":
        print(_json_record(fields))
    else:
        print("z_re,z_im,visibility,phase,indeterminate")
        print(
            ",".join(
                [
                    fmt(result.z.real),
                    fmt(result.z.imag),
                    fmt(result.visibility),
                    "nan" if result.indeterminate else fmt(result.phase),
                    "true" if result.indeterminate else "false",
                ]
            )
        )
    return 0


def cmd_fig1(args, parser) -> int:
    r_values = _parse_floats(args.r_list, "--r-list")
    rows = phase_shift_curves(
        r_values,
        delta_from=args.delta_from,
        delta_to=args.delta_to,
        samples=args.samples,
        epsilon=args.epsilon,
        max_depth=args.max_depth,
    )
    with _OutputFile(args.out) as fh:
        fh.write("r,delta,unwrapped_phase,visibility\n")
        for r, delta, phase, vis in rows:
            fh.write(f"{fmt(r)},{fmt(delta)},{fmt(phase)},{fmt(vis)}\n")
    return 0


def _wind_family(args, parser):
    if args.weights is not None and args.spin_j is None:
        parser.error("--weights needs --spin-j")
    if args.spin_j is None:
        return None
    if args.weights is None:
        return linear_spin_family(args.spin_j)
    return WeightRayFamily(args.spin_j, _parse_floats(args.weights, "--weights"))


def cmd_wind(args, parser) -> int:
    family = _wind_family(args, parser)
    path = circle_path(
        (args.center_r, args.center_delta),
        args.radius,
        samples=args.samples,
        orientation=args.orientation,
        family=family,
    )
    report = winding_number(path, epsilon=args.epsilon, max_depth=args.max_depth)
    fields = [
        ("total_phase", report.total_phase),
        ("winding", report.winding),
        ("residual", report.residual),
        ("min_visibility", report.min_visibility),
    ]
    if args.format == "json":
        print(_json_record(fields))
    else:
        print("total_phase,winding,residual,min_visibility")
        print(
            f"{fmt(report.total_phase)},{report.winding},"
            f"{fmt(report.residual)},{fmt(report.min_visibility)}"
        )
    return 0


def cmd_scan(args, parser) -> int:
    if args.pol_r_family != "linear":
        parser.error(f"unknown polarization family {args.pol_r_family!r}")
    family = linear_spin_family(args.spin_j) if args.spin_j is not None else None
    grid_nr, grid_nd = _parse_grid(args.grid)
    records, failures = scan_singularities(
        r_range=_parse_pair(args.r_range, "--r-range"),
        delta_range=_parse_pair(args.delta_range, "--delta-range"),
        grid_nr=grid_nr,
        grid_nd=grid_nd,
        family=family,
        zero_threshold=args.zero_threshold,
        probe_radius=args.probe_radius,
        probe_samples=args.probe_samples,
        epsilon=args.epsilon,
        max_depth=args.max_depth,
    )
    entries = [
        (
            rec.location.delta,
            rec.location.r,
            _json_record(
                [
                    ("r", rec.location.r),
                    ("delta", rec.location.delta),
                    ("winding", rec.winding),
                    ("probe_radius", rec.probe_radius),
                ]
            ),
        )
        for rec in records
    ]
    entries.extend(
        (
            fail.location.delta,
            fail.location.r,
            _json_record(
                [
                    ("r", fail.location.r),
                    ("delta", fail.location.delta),
                    ("winding", None),
                    ("probe_radius", fail.probe_radius),
                    ("error", fail.error),
                ]
            ),
        )
        for fail in failures
    )
    entries.sort(key=lambda item: (item[0], item[1]))
    with _OutputFile(args.out) as fh:
        if not entries:
            fh.write("[]\n")
        else:
            fh.write("[\n")
            fh.write(",\n".join("  " + text for _, _, text in entries))
            fh.write("\n]\n")
    return 0


def cmd_pattern(args, parser) -> int:
    spin_half = _spin_half_mode(args, parser)
    if spin_half:
        pattern = counter_moving_patterns(
            args.r, [args.delta], chi_samples=args.chi_samples, epsilon=args.epsilon
        )[0]
        header = "chi,intensity,channel_plus,channel_minus"
    else:
        u, rho = _load_pair(args)
        pattern = synthesize_pattern(u, rho, chi_samples=args.chi_samples, epsilon=args.epsilon)
        header = "chi,intensity"
    peak = peak_shift(pattern, epsilon=args.epsilon)
    with _OutputFile(args.out) as fh:
        fh.write(header + "\n")
        for i, chi in enumerate(pattern.chi):
            cells = [fmt(chi), fmt(pattern.intensity[i])]
            if spin_half:
                for weight, vis, theta in pattern.channels:
                    cells.append(fmt(weight * (1.0 + vis * math.cos(chi - theta))))
            fh.write(",".join(cells) + "\n")
        fh.write(
            f"# peak={fmt(peak.chi_star)} contrast={fmt(peak.contrast)} "
            f"indeterminate={'true' if peak.indeterminate else 'false'}\n"
        )
    return 0


def _add_epsilon(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--epsilon",
        type=float,
        default=DEFAULT_EPSILON,
        help="visibility threshold below which the phase is indeterminate",
    )


def _add_tracking(p: argparse.ArgumentParser) -> None:
    _add_epsilon(p)
    p.add_argument(
        "--max-depth", type=int, default=40, help="maximum segment bisection depth"
    )


def _add_point_or_files(p: argparse.ArgumentParser) -> None:
    p.add_argument("--r", type=float, default=None, help="spin-1/2 polarization in [-1, 1]")
    p.add_argument("--delta", type=float, default=None, help="per-arm field phase in radians")
    p.add_argument("--rho-file", default=None, help="density matrix literal JSON file")
    p.add_argument("--u-file", default=None, help="unitary matrix literal JSON file")
    p.add_argument(
        "--tol", type=float, default=DEFAULT_TOL, help="matrix validation tolerance"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mixedphase",
        description="Interference phase and visibility of mixed internal states: "
        "evaluate arg Tr(U rho), track the continuous phase, classify "
        "phase singularities, synthesize fringe patterns.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("phase", help="evaluate the interference phase at one point")
    _add_point_or_files(p)
    _add_epsilon(p)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument(
        "--dump",
        default=None,
        metavar="PREFIX",
        help="write the matrices used to PREFIX-rho.json and PREFIX-u.json",
    )
    p.set_defaults(func=cmd_phase)

    p = sub.add_parser(
        "fig1", help="sweep the continuous phase over delta for several polarizations"
    )
    p.add_argument(
        "--r-list",
        default="1,-1,0.001,-0.001",
        help="comma-separated polarization values, one sweep each",
    )
    p.add_argument("--delta-from", type=float, default=0.0)
    p.add_argument("--delta-to", type=float, default=math.pi)
    p.add_argument("--samples", type=int, default=256, help="sweep samples per curve")
    _add_tracking(p)
    p.add_argument("--out", default="-", help="output CSV path ('-' for stdout)")
    p.set_defaults(func=cmd_fig1)

    p = sub.add_parser("wind", help="winding number of a circular circuit")
    p.add_argument("--center-r", type=float, required=True)
    p.add_argument("--center-delta", type=float, required=True)
    p.add_argument("--radius", type=float, required=True)
    p.add_argument("--samples", type=int, default=256)
    p.add_argument("--orientation", choices=("ccw", "cw"), default="ccw")
    p.add_argument("--spin-j", type=float, default=None, help="use the spin-j family instead of spin-1/2")
    p.add_argument(
        "--weights",
        default=None,
        help="anchor level weights for the spin-j family (comma-separated, sum 1)",
    )
    _add_tracking(p)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_wind)

    p = sub.add_parser("scan", help="locate and classify phase singularities")
    p.add_argument("--r-range", default="-1,1")
    p.add_argument("--delta-range", default=f"0,{2 * math.pi!r}")
    p.add_argument("--grid", default="201,401", help="grid points as NR,ND")
    p.add_argument("--spin-j", type=float, default=None)
    p.add_argument("--pol-r-family", choices=("linear",), default="linear")
    p.add_argument("--zero-threshold", type=float, default=0.05)
    p.add_argument("--probe-radius", type=float, default=None)
    p.add_argument("--probe-samples", type=int, default=256)
    _add_tracking(p)
    p.add_argument("--out", default="-", help="output JSON path ('-' for stdout)")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("pattern", help="synthesize a two-beam interference pattern")
    _add_point_or_files(p)
    p.add_argument("--chi-samples", type=int, default=1024)
    _add_epsilon(p)
    p.add_argument("--out", default="-", help="output CSV path ('-' for stdout)")
    p.set_defaults(func=cmd_pattern)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, parser)
    except ComputationError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 3
    except (ValidationError, ValueError, OSError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
