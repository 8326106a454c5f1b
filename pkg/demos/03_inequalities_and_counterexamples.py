"""Inequalities that hold for convex bodies, and where convexity matters.

1. A unit square with a thin tail of height eps is not convex.  Eroding it
   by a small t removes the tail and lowers |D_t| h(D_t)^2, so the
   monotonicity genuinely needs convexity.
2. For the 2x1 rectangle, h / sqrt(lambda_1) decreases under erosion.
3. Thin rectangles satisfy sqrt(lambda_1) > (j/2) P / |K|; the square does not.
4. For a convex body, h^2 - h/r <= 2 pi / |C|, with equality for tangential
   bodies.
"""

import math

import numpy as np

from cheeger_lab import cheeger, rectangle, regular_polygon, spectral, square, stadium
from cheeger_lab.verify import repro_tailed_counterexample, tailed_scaled_energy

eps = 0.1
print("tailed square, eps = 0.1")
for t in (0.0, 0.005, 0.01, 0.02, 0.025):
    print(f"   t = {t:.3f}   |D_t| h(D_t)^2 = {tailed_scaled_energy(t, eps):.10f}")
print("   check passed:", repro_tailed_counterexample(eps).passed)
print()

print("2x1 rectangle, h / sqrt(lambda_1) along erosion")
for t in np.linspace(0.0, 0.45, 6):
    print(f"   t = {t:.2f}   ratio = {spectral.ratio_lambda_h(t):.10f}")
print()

print("eigenvalue condition (margin > 0 means it holds)")
for a in (0.01, 0.1, 0.4, 1.0):
    m = spectral.eigenvalue_condition_margin(spectral.RectSpec(a, 1.0))
    print(f"   {a:>4} x 1 rectangle: margin {m:+.6f}")
print("   crossover at width", spectral.eigenvalue_condition_threshold())
print()

print("h^2 - h/r versus 2 pi / |C|")
for name, b in [("unit square", square(1.0)), ("2x1 rectangle", rectangle(2.0, 1.0)),
                ("hexagon", regular_polygon(6, 1.0)), ("stadium", stadium(1.0, 0.5))]:
    res = cheeger(b)
    lhs = res.h ** 2 - res.h / b.inradius
    print(f"   {name:<14} {lhs:.10f} <= {2 * math.pi / res.area_C:.10f}")
