"""The Cheeger problem for the unit square, end to end.

For a planar convex body the Cheeger constant is 1/t*, where t* solves
|K_{-t}| = pi t^2.  For the unit square the inner bodies are squares of
side 1 - 2t, so t* = 1/(2 + sqrt(pi)) and the Cheeger set is the square
with its corners rounded off by quarter circles of radius t*.
"""

import math

from cheeger_lab import cheeger, derivative_fd, square

K = square(1.0)
res = cheeger(K)

print("h(K)              ", res.h)
print("2 + sqrt(pi)      ", 2 + math.sqrt(math.pi))
print("t*                ", res.t_star)
print("|C|               ", res.area_C)
print("P(C) / |C|        ", res.perimeter_C / res.area_C)

# The flat part of the Cheeger set's boundary sits on the square's edges.
# The four quarter circles add up to one full circle of radius t*.
print("contact length    ", res.contact_length)
print("P(C) - 2 pi t*    ", res.perimeter_C - 2 * math.pi * res.t_star)

# How fast does h change when the square is grown or shrunk by a disk?
fd = derivative_fd(K, 1e-3)
print("d/dt h(K_t) at 0  ", res.derivative_at_zero, "(formula)")
print("                  ", fd, "(finite differences)")
