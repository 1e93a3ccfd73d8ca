#!/usr/bin/env python3
"""Tour of the interference functional z = Tr(U rho) for spin-1/2 beams.

Evaluates the phase and visibility at a handful of (r, delta) points, once
through the closed form cos(delta) + i r sin(delta) and once through the
actual matrices, and shows the indeterminate result at the zero-contrast
point (r=0, delta=pi/2).
"""

import math

from mixedphase import (
    interference_functional,
    pancharatnam_phase,
    spin_half_density,
    spin_half_functional,
    spin_half_unitary,
)

POINTS = [
    (1.0, 0.7),           # pure state: phase is just delta
    (0.5, math.pi / 4),   # partial polarization
    (-0.5, math.pi / 4),  # flipping r conjugates z
    (0.001, 1.55),        # nearly unpolarized, close to the singularity
    (0.0, math.pi / 2),   # the singular point itself
]

print(f"{'r':>8} {'delta':>10} {'visibility':>12} {'phase':>12}  note")
for r, delta in POINTS:
    closed = spin_half_functional(r, delta)
    via_matrices = interference_functional(spin_half_unitary(delta), spin_half_density(r))
    gap = abs(closed.z - via_matrices.z)
    assert gap < 1e-12, f"closed form and matrix route disagree by {gap:.2e}"
    note = "indeterminate: zero contrast" if closed.indeterminate else ""
    phase_txt = "   --   " if closed.indeterminate else f"{closed.phase:+.6f}"
    print(f"{r:8.3f} {delta:10.6f} {closed.visibility:12.8f} {phase_txt:>12}  {note}")

print()
print("pure-state check: arg<psi|U|psi> for psi = |z+> equals delta")
for delta in (0.3, 1.0, 2.5):
    ip = pancharatnam_phase([1.0, 0.0], spin_half_unitary(delta))
    print(f"  delta = {delta:4.2f}  ->  phase = {ip.phase:.12f}")
