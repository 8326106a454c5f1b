"""How sqrt|K_t| h(K_t) evolves along the parallel-body flow.

The scale-free quantity sqrt|K_t| h(K_t) never increases in t.  It stays
constant while K_t is tangential (all edges touch the incircle) and drops
strictly afterwards.  A rectangle is never tangential, a triangle is
tangential on the inside, and the quadrilateral Q, a triangle with its tip
cut off, becomes tangential once the short top edge has been eroded away.
"""

from cheeger_lab import parallel_body, rectangle, regular_polygon, scaled_invariant, tau
from cheeger_lab.verify import quadrilateral_q, scan_scaled_cheeger

bodies = {
    "2x1 rectangle": rectangle(2.0, 1.0),
    "equilateral triangle": regular_polygon(3, 1.0),
    "quadrilateral Q": quadrilateral_q(),
}

for name, b in bodies.items():
    r = b.inradius
    scan = scan_scaled_cheeger(b, -0.95 * r, 1.0, 12)
    print(f"{name}: inradius {r:.6f}, tau {tau(b):.6f}, verdict {scan.verdict}")
    for t, v in zip(scan.t_values, scan.values):
        print(f"   t = {t:+.4f}   sqrt|K_t| h = {v:.10f}")
    print()

# Near tau the behaviour of Q switches from constant to strictly decreasing.
Q = bodies["quadrilateral Q"]
print(f"Q around tau = {tau(Q):.7f}")
for t in (-0.2, -0.1, -0.05, tau(Q), -0.01, 0.0, 0.01):
    print(f"   t = {t:+.7f}   sqrt|Q_t| h = {scaled_invariant(parallel_body(Q, t)):.12f}")
