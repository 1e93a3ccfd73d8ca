#!/usr/bin/env python3
"""Circuit integrals of the phase around the zero-contrast points.

A counterclockwise loop in the (r, delta) plane around a singularity
accumulates exactly +2pi, a clockwise one -2pi, and a loop enclosing both
singularities of the spin-1/2 family picks up +4pi. A loop enclosing
nothing accumulates zero. The winding survives far from the singularity,
so it can be measured without a close approach.
"""

import math

from mixedphase import ParameterPath, circle_path, winding_number

PI = math.pi


def show(name, report):
    print(
        f"{name:42s} total = {report.total_phase:+12.9f}  winding = {report.winding:+d}  "
        f"min visibility = {report.min_visibility:.4f}"
    )


show("ccw circle around (0, pi/2), radius 0.2", winding_number(circle_path((0.0, PI / 2), 0.2)))
show("cw  circle around (0, pi/2), radius 0.2", winding_number(circle_path((0.0, PI / 2), 0.2, orientation="cw")))
show("ccw circle around (0, 3pi/2), radius 0.2", winding_number(circle_path((0.0, 3 * PI / 2), 0.2)))
show("ccw circle around (0.5, pi/2): no zero", winding_number(circle_path((0.5, PI / 2), 0.1)))

# a distant rectangle enclosing both singularities at once
rectangle = ParameterPath(
    points=[
        (0.6, 0.3),
        (0.6, 2 * PI - 0.3),
        (-0.6, 2 * PI - 0.3),
        (-0.6, 0.3),
        (0.6, 0.3),
    ],
    closed=True,
)
show("ccw rectangle enclosing both zeros", winding_number(rectangle))
