"""Closed-form Dirichlet eigenvalues and the related constant checks.

Only domains with explicit spectra are covered: rectangles and disks.  The
Bessel and Airy zeros are tabulated constants (15 significant digits).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .roots import bisect_root

__all__ = [
    "RectSpec",
    "SpectralConstants",
    "CONSTANTS",
    "J2",
    "AIRY_A1",
    "lambda1_rectangle",
    "lambda1_disk",
    "lambda1_rect2x1_printed",
    "cheeger_rectangle",
    "cheeger_rect2x1_printed",
    "ratio_lambda_h",
    "eigenvalue_condition_margin",
    "satisfies_eigenvalue_condition",
    "eigenvalue_condition_threshold",
    "bessel_upper_bound",
    "bessel_bound_check",
]

# first zero of J_0, i.e. sqrt of the first Dirichlet eigenvalue of the unit disk
J2 = 2.404825557695773
# first (negative) zero of the Airy function Ai
AIRY_A1 = -2.338107410459767


@dataclass(frozen=True)
class SpectralConstants:
    j2: float = J2
    a1: float = AIRY_A1


CONSTANTS = SpectralConstants()


@dataclass(frozen=True)
class RectSpec:
    a: float
    b: float

    def __post_init__(self):
        for name in ("a", "b"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v > 0.0):
                raise ValueError(f"rectangle side {name} must be finite and positive, got {v}")

    @property
    def perimeter(self) -> float:
        return 2.0 * (self.a + self.b)

    @property
    def area(self) -> float:
        return self.a * self.b


def lambda1_rectangle(r: RectSpec) -> float:
    return math.pi ** 2 * (1.0 / r.a ** 2 + 1.0 / r.b ** 2)


def lambda1_disk(radius: float) -> float:
    if not radius > 0.0:
        raise ValueError("disk radius must be positive")
    return (J2 / radius) ** 2


def _check_t(t):
    if not 0.0 <= t < 0.5:
        raise ValueError(f"t = {t} outside [0, 0.5)")


def lambda1_rect2x1_printed(t: float) -> float:
    """First eigenvalue of the eroded 2x1 rectangle, in the half-width form."""
    _check_t(t)
    return math.pi ** 2 * (1.0 / (1.0 - 2.0 * t) ** 2 + 1.0 / (4.0 * (1.0 - t) ** 2))


def cheeger_rectangle(a: float, b: float) -> float:
    """Cheeger constant of an ``a x b`` rectangle.

    Root of ``(a - 2t)(b - 2t) = pi t^2`` solved in closed form; the
    rationalized expression avoids cancellation for thin rectangles.
    """
    s = a + b
    disc = math.sqrt((a - b) ** 2 + math.pi * a * b)
    # t* = (s - disc) / (4 - pi) = a b / (s + disc)
    return (s + disc) / (a * b)


def cheeger_rect2x1_printed(t: float) -> float:
    """Closed form of ``h`` for the 2x1 rectangle eroded by ``t``, as printed."""
    _check_t(t)
    return (4.0 - math.pi) / (3.0 - 4.0 * t - math.sqrt(1.0 + math.pi * (1.0 - 2.0 * t) * (2.0 - 2.0 * t)))


def ratio_lambda_h(t: float) -> float:
    """``lambda_1^{-1/2} / h^{-1}`` for the 2x1 rectangle eroded by ``t``."""
    _check_t(t)
    return cheeger_rect2x1_printed(t) / math.sqrt(lambda1_rect2x1_printed(t))


def eigenvalue_condition_margin(r: RectSpec) -> float:
    """``sqrt(lambda_1) - (j2 / 2) P / A``; positive when the condition holds."""
    return math.sqrt(lambda1_rectangle(r)) - 0.5 * J2 * r.perimeter / r.area


def satisfies_eigenvalue_condition(r: RectSpec) -> bool:
    return eigenvalue_condition_margin(r) > 0.0


def eigenvalue_condition_threshold(lo: float = 1e-3, hi: float = 1.0) -> float:
    """Aspect ratio ``eps`` at which ``eps x 1`` rectangles stop satisfying the condition."""
    return bisect_root(lambda e: eigenvalue_condition_margin(RectSpec(e, 1.0)), lo, hi, rtol=1e-14)


def bessel_upper_bound(n: int) -> float:
    """Airy-type upper bound on the first zero of ``J_{n/2 - 1}`` (``n >= 3``)."""
    nu = n / 2.0 - 1.0
    a1 = AIRY_A1
    return nu - a1 / 2.0 ** (1.0 / 3.0) * nu ** (1.0 / 3.0) + 0.15 * a1 * a1 * (2.0 / nu) ** (1.0 / 3.0)


def bessel_bound_check(n_max: int) -> bool:
    """True when ``bessel_upper_bound(n) < pi n / 2`` for every ``3 <= n <= n_max``."""
    if n_max < 3:
        raise ValueError("n_max must be >= 3")
    return all(bessel_upper_bound(n) < 0.5 * math.pi * n for n in range(3, n_max + 1))
