#!/usr/bin/env python3
"""Scan the (r, delta) plane for phase singularities and classify them.

For the spin-1/2 family the zeros of |Tr(U rho)| sit at (0, pi/2) and
(0, 3pi/2): on the unpolarized line, at half-odd multiples of pi. The
spin-1 linear polarization family moves them to the zeros of 1 + 2cos(delta).
Each located zero is confirmed by a small counterclockwise winding probe.
"""

from mixedphase import linear_spin_family, scan_singularities


def show(title, records, failures):
    print(title)
    for rec in records:
        print(
            f"  zero at (r = {rec.location.r:+.2e}, delta = {rec.location.delta:.9f})"
            f"  winding {rec.winding:+d}"
            f"  probe radius {rec.probe_radius:.4f}"
            f"  min visibility on probe {rec.min_visibility_on_probe:.3e}"
        )
    for fail in failures:
        print(f"  unclassified zero near {fail.location}: {fail.error}")
    if not records and not failures:
        print("  none found")
    print()


records, failures = scan_singularities(grid_nr=201, grid_nd=401)
show("spin-1/2 family, r in [-1, 1], delta in [0, 2pi]:", records, failures)

records, failures = scan_singularities(family=linear_spin_family(1.0), grid_nr=201, grid_nd=401)
show("spin-1 linear family, same region:", records, failures)

records, failures = scan_singularities(delta_range=(0.0, 1.0), grid_nr=64, grid_nd=64)
show("spin-1/2 family, delta in [0, 1] (visibility never vanishes):", records, failures)
