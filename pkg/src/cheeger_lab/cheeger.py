"""Cheeger constant and Cheeger set of planar rounded bodies.

For a planar convex body ``K`` the Cheeger constant is ``1 / t*`` where ``t*``
is the unique root of ``|K_{-t}| = pi t^2`` on ``(0, r(K))``, and the Cheeger
set is ``K_{-t*} + t* B`` (Kawohl and Lachand-Robert).  The root is bracketed by
``(0, r)`` and isolated by bisection.

The derivative of ``t -> h(K_t)`` at ``t = 0`` equals ``2 pi / |C| - h^2``,
``2 pi`` being the total curvature of the boundary of the Cheeger set ``C``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .geom import (
    ConvexPolygon,
    GeometryError,
    RoundedBody,
    erode,
    is_tangential,
    parallel_body,
)
from .roots import bisect_root

__all__ = [
    "DomainError",
    "CheegerResult",
    "inner_area",
    "inner_area_gap",
    "cheeger",
    "scaled_invariant",
    "tangential_closed_form_h",
    "derivative_fd",
    "polygon_derivative_identity",
]

TOTAL_CURVATURE = 2.0 * math.pi
ROOT_RTOL = 1e-13
ROOT_MAXITER = 200


class DomainError(GeometryError):
    """Argument outside the domain of a function."""


@dataclass(frozen=True)
class CheegerResult:
    h: float
    t_star: float
    cheeger_set: RoundedBody
    area_C: float
    perimeter_C: float
    contact_length: float
    derivative_at_zero: float

    def to_dict(self) -> dict:
        C = self.cheeger_set
        k = C.kernel
        return {
            "h": self.h,
            "t_star": self.t_star,
            "area_C": self.area_C,
            "perimeter_C": self.perimeter_C,
            "contact_length": self.contact_length,
            "derivative_at_zero": self.derivative_at_zero,
            "cheeger_set": {
                "kernel": type(k).__name__,
                "kernel_vertices": [list(v) for v in k.vertices],
                "radius": C.radius,
            },
        }


def inner_area(b: RoundedBody, t: float) -> float:
    """``|b_{-t}|`` for ``0 <= t <= r(b)``; zero past the inradius."""
    s = b.radius
    if t <= s:
        u = s - t
        return b.kernel.area + b.kernel.perimeter * u + math.pi * u * u
    if not isinstance(b.kernel, ConvexPolygon) or t >= b.inradius:
        return 0.0
    return erode(b.kernel, t - s).area


def inner_area_gap(b: RoundedBody, t: float) -> float:
    """``|b_{-t}| - pi t^2``; strictly decreasing on ``(0, r)``."""
    r = b.inradius
    if not 0.0 < t < r:
        raise DomainError(f"t = {t} outside (0, {r})")
    return inner_area(b, t) - math.pi * t * t


def _solve_t_star(b: RoundedBody) -> float:
    r = b.inradius
    return bisect_root(lambda t: inner_area(b, t) - math.pi * t * t, 0.0, r,
                       rtol=ROOT_RTOL, maxiter=ROOT_MAXITER)


def cheeger(b: RoundedBody) -> CheegerResult:
    """Cheeger constant, Cheeger set and contact data of ``b``."""
    if not b.has_interior:
        raise GeometryError("Cheeger problem needs a body with nonempty interior")
    t = _solve_t_star(b)
    s = b.radius
    if t > s:
        # flat pieces of the Cheeger set lie on the edges of b, arcs are interior
        kernel = erode(b.kernel, t - s)
        C = RoundedBody(kernel, t)
        contact = kernel.perimeter
    else:
        C = b
        contact = b.perimeter
    aC, pC = C.area, C.perimeter
    h = 1.0 / t
    return CheegerResult(
        h=h,
        t_star=t,
        cheeger_set=C,
        area_C=aC,
        perimeter_C=pC,
        contact_length=contact,
        derivative_at_zero=TOTAL_CURVATURE / aC - h * h,
    )


def scaled_invariant(b: RoundedBody) -> float:
    """Scale-free quantity ``sqrt(|b|) h(b)``."""
    return math.sqrt(b.area) * cheeger(b).h


def tangential_closed_form_h(b: RoundedBody) -> float:
    """``P / (2|b|) + sqrt(pi / |b|)``, valid for tangential polygons and disks."""
    if not (b.is_disk or (b.is_polygon and is_tangential(b.kernel))):
        raise GeometryError("closed form needs a tangential polygon or a disk")
    A = b.area
    return b.perimeter / (2.0 * A) + math.sqrt(math.pi / A)


def derivative_fd(b: RoundedBody, step: float) -> float:
    """Richardson-extrapolated central difference of ``t -> h(b_t)`` at 0."""
    r = b.inradius
    if not 0.0 < step < r / 8.0:
        raise DomainError(f"step must lie in (0, r/8) = (0, {r / 8.0})")

    def h_at(t):
        return cheeger(parallel_body(b, t)).h

    def central(d):
        return (h_at(d) - h_at(-d)) / (2.0 * d)

    return (4.0 * central(step / 2.0) - central(step)) / 3.0


def polygon_derivative_identity(b: RoundedBody) -> tuple[float, float]:
    """Both forms of the derivative when the contact set is flat.

    Returns ``(2 pi/|C| - h^2, -h * contact / |C|)``.
    """
    res = cheeger(b)
    if not res.t_star > b.radius:
        raise DomainError("contact is not flat: the Cheeger set is the body itself")
    return (res.derivative_at_zero, -res.h * res.contact_length / res.area_C)
