#!/usr/bin/env python3
"""Continuous phase shift versus applied field phase for four polarizations.

Reproduces the characteristic curve family: linear for pure states
(r = +-1), an increasingly sharp step near delta = pi/2 as |r| shrinks,
and a sign that follows the sign of r. Every curve climbs by exactly
+-pi as delta sweeps 0 -> pi. Writes a CSV and a PNG under demos/out/.
"""

import math
import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from mixedphase import phase_shift_curves

R_VALUES = [1.0, -1.0, 0.001, -0.001]
LABELS = {1.0: "A  (r = 1)", -1.0: "B  (r = -1)", 0.001: "C  (r = 0.001)", -0.001: "D  (r = -0.001)"}


def main():
    os.makedirs("demos/out", exist_ok=True)
    rows = phase_shift_curves(R_VALUES, 0.0, math.pi, samples=512)

    with open("demos/out/phase_shift_curves.csv", "w", newline="\n") as fh:
        fh.write("r,delta,unwrapped_phase,visibility\n")
        for r, delta, phase, vis in rows:
            fh.write(f"{r:.10g},{delta:.10g},{phase:.10g},{vis:.10g}\n")

    fig, ax = plt.subplots(figsize=(6, 4.5))
    for r in R_VALUES:
        curve = [(delta, phase) for rr, delta, phase, _ in rows if rr == r]
        deltas, phases = zip(*curve)
        ax.plot(deltas, phases, label=LABELS[r])
        print(f"r = {r:+.3f}: endpoint phase = {phases[-1]:+.9f}  (target {math.copysign(math.pi, r):+.9f})")
    ax.set_xlabel(r"$\delta$ (rad)")
    ax.set_ylabel(r"unwrapped phase $\int d\phi$ (rad)")
    ax.axvline(math.pi / 2, color="gray", lw=0.5, ls=":")
    ax.legend()
    fig.tight_layout()
    fig.savefig("demos/out/phase_shift_curves.png", dpi=150)
    print("wrote demos/out/phase_shift_curves.csv and .png")


if __name__ == "__main__":
    main()
