"""Planar convex bodies of the form ``kernel + s * unit disk``.

Every body handled by the package is a :class:`RoundedBody`: a kernel (a
strictly convex polygon, a segment or a single point) dilated by a disk of
radius ``s >= 0``.  The class is closed under inner and outer parallel bodies,
and it contains the Cheeger set of each of its members, so areas, perimeters
and inradii are always available in closed form (Steiner formula).

Inner parallel bodies of polygons are computed with an event-driven erosion:
every edge line moves inward at unit speed, each edge shrinks linearly and
disappears at a computable time, and the polygon collapses to a point or a
segment at ``t = r``.  The resulting schedule gives exact erosions at any depth
and the inradius/Chebyshev center as a by-product.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple, Sequence, Union

import numpy as np

__all__ = [
    "TOL_GEO",
    "TOL_TANGENTIAL",
    "GeometryError",
    "Point2",
    "ConvexPolygon",
    "Segment",
    "PointKernel",
    "Kernel",
    "RoundedBody",
    "area",
    "perimeter",
    "inradius",
    "chebyshev_center",
    "erode",
    "parallel_body",
    "form_body",
    "is_tangential",
    "is_tangential_body",
    "tau",
    "to_polyline",
    "scaled",
    "square",
    "rectangle",
    "regular_polygon",
    "triangle",
    "disk",
    "stadium",
    "polygon",
]

TOL_GEO = 1e-9
TOL_TANGENTIAL = 1e-8

# Relative tolerance for merging simultaneous erosion events.
_TOL_EVENT = 1e-12


class GeometryError(ValueError):
    """Invalid geometric input or an operation outside its domain."""


class Point2(NamedTuple):
    x: float
    y: float


def _cross(ax, ay, bx, by):
    return ax * by - ay * bx


def _shoelace(pts):
    # measured from the first vertex to avoid cancellation for small, far-off rings
    s = 0.0
    n = len(pts)
    ox, oy = pts[0]
    for i in range(1, n - 1):
        x0, y0 = pts[i][0] - ox, pts[i][1] - oy
        x1, y1 = pts[i + 1][0] - ox, pts[i + 1][1] - oy
        s += x0 * y1 - x1 * y0
    return 0.5 * s


def _diameter(pts):
    best = 0.0
    for i in range(len(pts)):
        xi, yi = pts[i]
        for j in range(i + 1, len(pts)):
            d = math.hypot(pts[j][0] - xi, pts[j][1] - yi)
            if d > best:
                best = d
    return best


def _farthest_pair(pts):
    best, pair = -1.0, (pts[0], pts[0])
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            d = math.hypot(pts[j][0] - pts[i][0], pts[j][1] - pts[i][1])
            if d > best:
                best, pair = d, (pts[i], pts[j])
    return pair


def _clean_ring(pts, tol):
    """Drop near-duplicate and near-collinear vertices of a convex ring.

    ``tol`` is a length; collinearity uses ``tol * diam``.
    """
    pts = list(pts)
    if len(pts) < 3:
        return pts
    diam = _diameter(pts)
    eps = tol * diam
    changed = True
    while changed and len(pts) >= 3:
        changed = False
        out = []
        for p in pts:
            if out and math.hypot(p[0] - out[-1][0], p[1] - out[-1][1]) <= eps:
                continue
            out.append(p)
        if len(out) > 1 and math.hypot(out[0][0] - out[-1][0], out[0][1] - out[-1][1]) <= eps:
            out.pop()
        if len(out) != len(pts):
            changed = True
        pts = out
        n = len(pts)
        if n < 3:
            break
        for i in range(n):
            a, b, c = pts[i - 1], pts[i], pts[(i + 1) % n]
            if _cross(b[0] - a[0], b[1] - a[1], c[0] - b[0], c[1] - b[1]) <= eps * diam:
                del pts[i]
                changed = True
                break
    return pts


# --------------------------------------------------------------------------
# Kernels
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class ConvexPolygon:
    """Strictly convex polygon with counterclockwise vertices."""

    vertices: tuple

    def __post_init__(self):
        verts = tuple(Point2(float(x), float(y)) for x, y in self.vertices)
        object.__setattr__(self, "vertices", verts)
        n = len(verts)
        if n < 3:
            raise GeometryError(f"a polygon needs at least 3 vertices, got {n}")
        if not all(math.isfinite(c) for v in verts for c in v):
            raise GeometryError("polygon vertices must be finite")
        diam = _diameter(verts)
        if diam <= 0.0:
            raise GeometryError("polygon has zero diameter")
        if _shoelace(verts) <= 0.0:
            raise GeometryError("polygon vertices must be counterclockwise")
        for i in range(n):
            a, b = verts[i - 1], verts[i]
            if math.hypot(b[0] - a[0], b[1] - a[1]) <= TOL_GEO * diam:
                raise GeometryError(f"vertices {(i - 1) % n} and {i} coincide")
        for i in range(n):
            a, b, c = verts[i - 1], verts[i], verts[(i + 1) % n]
            turn = _cross(b[0] - a[0], b[1] - a[1], c[0] - b[0], c[1] - b[1])
            if turn <= TOL_GEO * diam * diam:
                raise GeometryError(f"polygon is not strictly convex at vertex {i}")
        # a ring with positive turns everywhere can still wind twice
        total = 0.0
        for i in range(n):
            a, b, c = verts[i - 1], verts[i], verts[(i + 1) % n]
            total += math.atan2(
                _cross(b[0] - a[0], b[1] - a[1], c[0] - b[0], c[1] - b[1]),
                (b[0] - a[0]) * (c[0] - b[0]) + (b[1] - a[1]) * (c[1] - b[1]),
            )
        if abs(total - 2.0 * math.pi) > 1e-6:
            raise GeometryError("polygon boundary winds more than once")

    @property
    def n(self) -> int:
        return len(self.vertices)

    @cached_property
    def area(self) -> float:
        return _shoelace(self.vertices)

    @cached_property
    def perimeter(self) -> float:
        v = self.vertices
        return sum(math.hypot(v[(i + 1) % self.n][0] - v[i][0], v[(i + 1) % self.n][1] - v[i][1])
                   for i in range(self.n))

    @cached_property
    def diameter(self) -> float:
        return _diameter(self.vertices)

    def edge_lines(self):
        """Inward unit normals and offsets ``(nx, ny, c)`` with ``n . x >= c`` inside."""
        v = self.vertices
        out = []
        for i in range(self.n):
            (x0, y0), (x1, y1) = v[i], v[(i + 1) % self.n]
            L = math.hypot(x1 - x0, y1 - y0)
            nx, ny = -(y1 - y0) / L, (x1 - x0) / L
            out.append((nx, ny, nx * x0 + ny * y0))
        return out

    def outward_normals(self):
        return [(-nx, -ny) for nx, ny, _ in self.edge_lines()]

    @cached_property
    def _schedule(self) -> "_ErosionSchedule":
        return _ErosionSchedule(self)

    @property
    def inradius(self) -> float:
        return self._schedule.r

    def contains(self, p, tol: float = 0.0) -> bool:
        return all(nx * p[0] + ny * p[1] >= c - tol for nx, ny, c in self.edge_lines())

    def scaled(self, gamma: float) -> "ConvexPolygon":
        return ConvexPolygon(tuple((gamma * x, gamma * y) for x, y in self.vertices))

    def as_array(self) -> np.ndarray:
        return np.asarray(self.vertices, dtype=float)


@dataclass(frozen=True)
class Segment:
    """Closed segment with distinct endpoints; perimeter counts both sides."""

    a: Point2
    b: Point2

    def __post_init__(self):
        a, b = Point2(*map(float, self.a)), Point2(*map(float, self.b))
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        if not all(math.isfinite(c) for c in (*a, *b)):
            raise GeometryError("segment endpoints must be finite")
        if a == b:
            raise GeometryError("segment endpoints must be distinct")

    @property
    def length(self) -> float:
        return math.hypot(self.b[0] - self.a[0], self.b[1] - self.a[1])

    area = 0.0
    inradius = 0.0

    @property
    def perimeter(self) -> float:
        return 2.0 * self.length

    @property
    def diameter(self) -> float:
        return self.length

    @property
    def vertices(self):
        return (self.a, self.b)

    def scaled(self, gamma: float) -> "Segment":
        return Segment((gamma * self.a[0], gamma * self.a[1]), (gamma * self.b[0], gamma * self.b[1]))


@dataclass(frozen=True)
class PointKernel:
    p: Point2

    def __post_init__(self):
        p = Point2(*map(float, self.p))
        if not all(math.isfinite(c) for c in p):
            raise GeometryError("point must be finite")
        object.__setattr__(self, "p", p)

    area = 0.0
    perimeter = 0.0
    inradius = 0.0
    diameter = 0.0

    @property
    def vertices(self):
        return (self.p,)

    def scaled(self, gamma: float) -> "PointKernel":
        return PointKernel((gamma * self.p[0], gamma * self.p[1]))


Kernel = Union[ConvexPolygon, Segment, PointKernel]


def _degenerate_kernel(pts, as_point: bool = False) -> Kernel:
    """Collapse a thin point cloud to a Segment or a PointKernel."""
    if as_point or len(pts) == 1:
        return PointKernel((sum(p[0] for p in pts) / len(pts), sum(p[1] for p in pts) / len(pts)))
    a, b = _farthest_pair(pts)
    if a == b:
        return PointKernel(a)
    return Segment(a, b)


# --------------------------------------------------------------------------
# Event-driven erosion
# --------------------------------------------------------------------------


def _vertex_motion(li, lj):
    """Intersection of two inward-offset lines as ``x(t) = x0 + t * w``."""
    a1, b1, c1 = li
    a2, b2, c2 = lj
    det = a1 * b2 - a2 * b1
    x0 = (c1 * b2 - b1 * c2) / det
    y0 = (a1 * c2 - a2 * c1) / det
    wx = (b2 - b1) / det
    wy = (a1 - a2) / det
    return x0, y0, wx, wy


class _ErosionSchedule:
    """Active edge sets of ``P_{-t}`` for ``0 <= t <= r``.

    ``events`` lists ``(t_start, active_edges)``; the last entry is valid up to
    the collapse time ``r``, at which the polygon degenerates to ``collapse``.
    """

    def __init__(self, poly: ConvexPolygon):
        self.lines = poly.edge_lines()
        self.diam = poly.diameter
        tol = _TOL_EVENT * self.diam
        active = list(range(poly.n))
        self.events = [(0.0, tuple(active))]
        while True:
            m = len(active)
            motions = [_vertex_motion(self.lines[active[k]], self.lines[active[(k + 1) % m]])
                       for k in range(m)]
            times = []
            for k in range(m):
                nx, ny, _ = self.lines[active[k]]
                dx, dy = ny, -nx
                x0a, y0a, wxa, wya = motions[k - 1]
                x0b, y0b, wxb, wyb = motions[k]
                L0 = dx * (x0b - x0a) + dy * (y0b - y0a)
                Lw = dx * (wxb - wxa) + dy * (wyb - wya)
                times.append(-L0 / Lw if Lw < 0.0 else math.inf)
            t_min = min(times)
            keep = [e for e, tv in zip(active, times) if tv > t_min + tol]
            if len(keep) < 3 or not self._proper(keep):
                self.r = t_min
                pts = [(x0 + t_min * wx, y0 + t_min * wy) for x0, y0, wx, wy in motions]
                self.collapse = _degenerate_kernel(pts, _diameter(pts) <= TOL_GEO * self.diam)
                break
            active = keep
            self.events.append((t_min, tuple(active)))
        if isinstance(self.collapse, Segment):
            a, b = self.collapse.a, self.collapse.b
            self.center = Point2(0.5 * (a[0] + b[0]), 0.5 * (a[1] + b[1]))
        else:
            self.center = self.collapse.p

    def _proper(self, edges):
        m = len(edges)
        for k in range(m):
            a1, b1, _ = self.lines[edges[k]]
            a2, b2, _ = self.lines[edges[(k + 1) % m]]
            if a1 * b2 - a2 * b1 <= 1e-12:
                return False
        return True

    def active_at(self, t):
        current = self.events[0][1]
        for t0, edges in self.events:
            if t0 <= t:
                current = edges
            else:
                break
        return current

    def points_at(self, t):
        edges = self.active_at(t)
        m = len(edges)
        pts = []
        for k in range(m):
            x0, y0, wx, wy = _vertex_motion(self.lines[edges[k]], self.lines[edges[(k + 1) % m]])
            pts.append((x0 + t * wx, y0 + t * wy))
        return pts


def erode(p: ConvexPolygon, t: float) -> Kernel:
    """Inner parallel set ``{x : B(x, t) inside p}`` for ``0 <= t <= r(p)``."""
    if not isinstance(p, ConvexPolygon):
        raise GeometryError("erode expects a ConvexPolygon")
    t = float(t)
    if not math.isfinite(t) or t < 0.0:
        raise GeometryError(f"erosion depth must be finite and >= 0, got {t}")
    if t == 0.0:
        return p
    sched = p._schedule
    tol = TOL_GEO * p.diameter
    if t > sched.r + tol:
        raise GeometryError(f"erosion depth {t} exceeds the inradius {sched.r}")
    if t >= sched.r:
        return sched.collapse
    pts = sched.points_at(t)
    as_point = isinstance(sched.collapse, PointKernel)
    # degeneracy is judged by the remaining depth, so tiny but fat polygons survive
    if sched.r - t <= tol:
        return _degenerate_kernel(pts, as_point)
    ring = _clean_ring(pts, TOL_GEO)
    if len(ring) < 3:
        return _degenerate_kernel(pts, as_point)
    try:
        return ConvexPolygon(tuple(ring))
    except GeometryError:
        return _degenerate_kernel(pts, as_point)


def chebyshev_center(p: ConvexPolygon):
    """Center and radius of the largest inscribed disk.

    When the optimal centers form a segment (parallel edges realize the
    inradius) the midpoint of that segment is returned.
    """
    sched = p._schedule
    return sched.center, sched.r


# --------------------------------------------------------------------------
# Rounded bodies
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class RoundedBody:
    """``kernel + radius * B`` with ``B`` the closed unit disk."""

    kernel: Kernel
    radius: float = 0.0

    def __post_init__(self):
        s = float(self.radius)
        if not math.isfinite(s) or s < 0.0:
            raise GeometryError(f"radius must be finite and >= 0, got {self.radius}")
        if not isinstance(self.kernel, (ConvexPolygon, Segment, PointKernel)):
            raise GeometryError(f"unsupported kernel type {type(self.kernel).__name__}")
        object.__setattr__(self, "radius", s)

    @property
    def has_interior(self) -> bool:
        return isinstance(self.kernel, ConvexPolygon) or self.radius > 0.0

    @property
    def is_disk(self) -> bool:
        return isinstance(self.kernel, PointKernel) and self.radius > 0.0

    @property
    def is_polygon(self) -> bool:
        return isinstance(self.kernel, ConvexPolygon) and self.radius == 0.0

    @property
    def area(self) -> float:
        s = self.radius
        return self.kernel.area + self.kernel.perimeter * s + math.pi * s * s

    @property
    def perimeter(self) -> float:
        return self.kernel.perimeter + 2.0 * math.pi * self.radius

    @property
    def inradius(self) -> float:
        return self.kernel.inradius + self.radius

    @property
    def diameter(self) -> float:
        return self.kernel.diameter + 2.0 * self.radius

    def __repr__(self):
        k = self.kernel
        if isinstance(k, ConvexPolygon):
            desc = f"polygon[{k.n}]"
        elif isinstance(k, Segment):
            desc = f"segment[{k.length:.6g}]"
        else:
            desc = "point"
        return f"RoundedBody({desc}, radius={self.radius:.6g})"


def area(b: RoundedBody) -> float:
    return b.area


def perimeter(b: RoundedBody) -> float:
    return b.perimeter


def inradius(b: RoundedBody) -> float:
    return b.inradius


def parallel_body(b: RoundedBody, t: float) -> RoundedBody:
    """Outer (``t > 0``) or inner (``t < 0``) parallel body."""
    t = float(t)
    r = b.inradius
    if not math.isfinite(t) or t <= -r:
        raise GeometryError(f"parallel body parameter {t} must exceed -inradius = {-r}")
    s = b.radius
    if t >= -s:
        return RoundedBody(b.kernel, max(s + t, 0.0))
    if not isinstance(b.kernel, ConvexPolygon):
        raise GeometryError(f"parallel body parameter {t} must exceed -inradius = {-r}")
    return RoundedBody(erode(b.kernel, -t - s), 0.0)


def scaled(b: RoundedBody, gamma: float) -> RoundedBody:
    """Homothetic copy ``gamma * b`` about the origin."""
    if not gamma > 0.0:
        raise GeometryError("scale factor must be positive")
    return RoundedBody(b.kernel.scaled(gamma), gamma * b.radius)


# --------------------------------------------------------------------------
# Form body and tangential bodies
# --------------------------------------------------------------------------


def form_body(p: ConvexPolygon) -> ConvexPolygon:
    """Intersection of ``<x, u> <= 1`` over the outward edge normals ``u``."""
    normals = p.outward_normals()
    m = len(normals)
    pts = []
    for k in range(m):
        (a1, b1), (a2, b2) = normals[k - 1], normals[k]
        det = a1 * b2 - a2 * b1
        pts.append(((b2 - b1) / det, (a1 - a2) / det))
    return ConvexPolygon(tuple(_clean_ring(pts, TOL_GEO)))


def is_tangential(p: ConvexPolygon, tol: float = TOL_TANGENTIAL) -> bool:
    """True when one circle touches every edge line (homothety with the form body)."""
    lines = p.edge_lines()
    A = np.array([[nx, ny, 1.0] for nx, ny, _ in lines])
    rhs = np.array([c for _, _, c in lines])
    # n . x - c = r  <=>  [nx ny -1] (x, y, r) = c ; solved as (x, y, -r)
    sol, *_ = np.linalg.lstsq(A, rhs, rcond=None)
    r_fit = -sol[2]
    resid = float(np.max(np.abs(A @ sol - rhs)))
    scale = tol * p.diameter
    return resid <= scale and abs(r_fit - p.inradius) <= scale


def is_tangential_body(b: RoundedBody, tol: float = TOL_TANGENTIAL) -> bool:
    """Tangential test for a rounded body: tangential polygons and disks."""
    if b.is_disk:
        return True
    return b.is_polygon and is_tangential(b.kernel, tol)


def tau(b: RoundedBody) -> float:
    """Infimum of the parameters ``t`` for which the parallel body is not tangential.

    Returns ``-inradius(b)`` when no parallel body is tangential.

    Within one stage of the erosion schedule the edge lines only translate
    inward, so tangency is a property of the stage.  A tangential polygon
    erodes homothetically and never loses an edge, hence only the final
    stage can be tangential, and tau is read off its start time exactly.
    """
    if not b.has_interior:
        raise GeometryError("tau needs a body with nonempty interior")
    if b.is_disk:
        raise GeometryError("tau is undefined for a disk")
    p, s = b.kernel, b.radius
    if not isinstance(p, ConvexPolygon):
        return -b.inradius
    if is_tangential(p):
        return 0.0 - s
    sched = p._schedule
    t_last = sched.events[-1][0]
    if t_last == 0.0:
        return -b.inradius
    probe = erode(p, t_last + 0.5 * (sched.r - t_last))
    if isinstance(probe, ConvexPolygon) and is_tangential(probe):
        return -(s + t_last)
    return -b.inradius


# --------------------------------------------------------------------------
# Boundary approximation
# --------------------------------------------------------------------------


def _arc_points(cx, cy, s, a0, a1, arc_tol):
    """Points on the arc from angle a0 to a1 (counterclockwise), both excluded."""
    sweep = a1 - a0
    if arc_tol >= s:
        n = max(1, int(math.ceil(sweep / (math.pi / 2))))
    else:
        dmax = 2.0 * math.acos(1.0 - arc_tol / s)
        n = max(1, int(math.ceil(sweep / dmax)))
    ang = a0 + sweep * np.arange(1, n) / n
    return np.column_stack([cx + s * np.cos(ang), cy + s * np.sin(ang)])


def _boundary_pieces(b: RoundedBody):
    """Corner centers with their arc angle ranges, in counterclockwise order.

    Between consecutive corners the boundary is a straight segment.
    """
    k, s = b.kernel, b.radius
    if isinstance(k, PointKernel):
        return [(k.p, 0.0, 2.0 * math.pi)]
    if isinstance(k, Segment):
        ang = math.atan2(k.b[1] - k.a[1], k.b[0] - k.a[0])
        return [(k.b, ang - math.pi / 2, ang + math.pi / 2),
                (k.a, ang + math.pi / 2, ang + 3 * math.pi / 2)]
    normals = k.outward_normals()
    out = []
    for i, v in enumerate(k.vertices):
        ux0, uy0 = normals[i - 1]
        ux1, uy1 = normals[i]
        a0 = math.atan2(uy0, ux0)
        a1 = math.atan2(uy1, ux1)
        while a1 <= a0:
            a1 += 2.0 * math.pi
        out.append((v, a0, a1))
    return out


def to_polyline(b: RoundedBody, arc_tol: float) -> np.ndarray:
    """Closed counterclockwise polyline inscribed in the boundary of ``b``.

    Arcs are sampled so that the sagitta of every chord is at most ``arc_tol``.
    Returned as an ``(m, 2)`` array without repeating the first point.
    """
    if not b.has_interior:
        raise GeometryError("to_polyline needs a body with nonempty interior")
    s = b.radius
    if s == 0.0:
        return b.kernel.as_array()
    chunks = []
    for (cx, cy), a0, a1 in _boundary_pieces(b):
        chunks.append([[cx + s * math.cos(a0), cy + s * math.sin(a0)]])
        chunks.append(_arc_points(cx, cy, s, a0, a1, arc_tol))
        chunks.append([[cx + s * math.cos(a1), cy + s * math.sin(a1)]])
    pts = np.vstack([np.asarray(c, dtype=float).reshape(-1, 2) for c in chunks])
    # drop consecutive duplicates (arcs of zero sweep do not occur, but
    # the closing point of a full circle repeats the first)
    keep = np.ones(len(pts), dtype=bool)
    d = np.linalg.norm(np.diff(pts, axis=0, append=pts[:1]), axis=1)
    keep[d == 0.0] = False
    return pts[keep]


# --------------------------------------------------------------------------
# Named shapes
# --------------------------------------------------------------------------


def polygon(vertices: Sequence, radius: float = 0.0) -> RoundedBody:
    return RoundedBody(ConvexPolygon(tuple(map(tuple, vertices))), radius)


def square(a: float = 1.0, radius: float = 0.0) -> RoundedBody:
    """Square ``[0, a]^2``."""
    return polygon([(0, 0), (a, 0), (a, a), (0, a)], radius)


def rectangle(a: float, b: float, radius: float = 0.0) -> RoundedBody:
    """Rectangle ``[0, a] x [0, b]``."""
    return polygon([(0, 0), (a, 0), (a, b), (0, b)], radius)


def regular_polygon(n: int, side: float = 1.0, radius: float = 0.0) -> RoundedBody:
    """Regular ``n``-gon centered at the origin with a horizontal bottom edge."""
    n = int(n)
    if n < 3:
        raise GeometryError("a regular polygon needs n >= 3")
    R = side / (2.0 * math.sin(math.pi / n))
    start = -math.pi / 2 - math.pi / n
    verts = [(R * math.cos(start + 2 * math.pi * k / n), R * math.sin(start + 2 * math.pi * k / n))
             for k in range(n)]
    return polygon(verts, radius)


def triangle(p1, p2, p3, radius: float = 0.0) -> RoundedBody:
    """Triangle from three points given in any order."""
    pts = [tuple(map(float, p)) for p in (p1, p2, p3)]
    if _shoelace(pts) < 0.0:
        pts.reverse()
    return polygon(pts, radius)


def disk(r: float = 1.0, center=(0.0, 0.0)) -> RoundedBody:
    if not r > 0.0:
        raise GeometryError("disk radius must be positive")
    return RoundedBody(PointKernel(center), r)


def stadium(length: float, radius: float) -> RoundedBody:
    """Segment ``[0, length] x {0}`` dilated by ``radius``."""
    return RoundedBody(Segment((0.0, 0.0), (length, 0.0)), radius)
