"""Verification suites: inequalities, monotonicity scans and counterexamples.

Every check returns a :class:`CheckReport`.  Inequalities ``lhs >= rhs`` are
measured by the relative violation ``max((rhs - lhs) / scale)`` over a grid
and the worst grid point is kept as the witness.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import spectral
from .cheeger import cheeger, scaled_invariant
from .geom import (
    GeometryError,
    RoundedBody,
    disk,
    is_tangential_body,
    parallel_body,
    polygon,
    rectangle,
    regular_polygon,
    square,
    stadium,
    tau,
    triangle,
)

__all__ = [
    "TOL_SCAN",
    "ScanSeries",
    "CheckReport",
    "classify",
    "scan_scaled_cheeger",
    "check_scaled_cheeger_monotonicity",
    "check_matheron",
    "check_larson",
    "check_isoperimetric",
    "check_inner_area_comparison",
    "check_contact_bounds",
    "check_brunn_minkowski_h",
    "check_general_monotonicity",
    "check_inradius_derivative_bounds",
    "tailed_scaled_energy",
    "repro_tailed_counterexample",
    "quadrilateral_q",
    "repro_quad_scaling",
    "repro_rectangle_ratio",
    "repro_thin_rectangle",
    "repro_bessel",
    "local_min_demo",
    "default_corpus",
    "run_suite",
    "run_repro",
    "REPRO_NAMES",
]

TOL_SCAN = 1e-9
# equality / strictness threshold for the tangential dichotomy
TOL_EQUALITY = 1e-10


@dataclass(frozen=True)
class ScanSeries:
    t_values: np.ndarray
    values: np.ndarray
    verdict: str
    max_violation: float
    columns: dict = field(default_factory=dict)

    def rows(self):
        """CSV rows ``t, area, perimeter, inradius, h, sqrtA_h``."""
        c = self.columns
        for i, t in enumerate(self.t_values):
            yield (float(t), float(c["area"][i]), float(c["perimeter"][i]),
                   float(c["inradius"][i]), float(c["h"][i]), float(self.values[i]))


@dataclass(frozen=True)
class CheckReport:
    name: str
    passed: bool
    witness: tuple | None
    tolerance: float
    violation: float = 0.0
    skipped: bool = False
    details: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        w = None
        if self.witness is not None:
            t, lhs, rhs = self.witness
            w = {"t": _num(t), "lhs": _num(lhs), "rhs": _num(rhs)}
        return {
            "name": self.name,
            "passed": bool(self.passed),
            "skipped": bool(self.skipped),
            "tolerance": float(self.tolerance),
            "violation": float(self.violation),
            "witness": w,
            "details": {k: _plain(v) for k, v in sorted(self.details.items())},
        }


def _num(x):
    return None if x is None else float(x)


def _plain(v):
    if isinstance(v, (bool, np.bool_)):
        return bool(v)
    if isinstance(v, (int, np.integer)):
        return int(v)
    if isinstance(v, (float, np.floating)):
        return float(v)
    if isinstance(v, (list, tuple, np.ndarray)):
        return [_plain(x) for x in v]
    if isinstance(v, dict):
        return {k: _plain(x) for k, x in v.items()}
    return v


def _skipped(name, reason) -> CheckReport:
    return CheckReport(name, True, None, 0.0, skipped=True, details={"reason": reason})


def _ge_report(name, ts, lhs, rhs, tol, **details) -> CheckReport:
    """Report for ``lhs >= rhs`` sampled at ``ts``."""
    lhs = np.asarray(lhs, dtype=float)
    rhs = np.asarray(rhs, dtype=float)
    scale = np.maximum(np.maximum(np.abs(lhs), np.abs(rhs)), 1e-300)
    viol = (rhs - lhs) / scale
    k = int(np.argmax(viol))
    worst = float(viol[k])
    return CheckReport(name, worst <= tol, (float(ts[k]), float(lhs[k]), float(rhs[k])), tol,
                       violation=max(worst, 0.0), details=details)


# --------------------------------------------------------------------------
# Scans
# --------------------------------------------------------------------------


def classify(values, tol: float = TOL_SCAN) -> tuple[str, float]:
    """Monotonicity verdict of a sampled sequence and its worst increase.

    Differences are compared against ``tol * max|values|``.
    """
    v = np.asarray(values, dtype=float)
    scale = max(float(np.max(np.abs(v))), 1e-300)
    d = np.diff(v) / scale
    max_violation = max(float(np.max(d)), 0.0) if d.size else 0.0
    if d.size == 0 or np.all(np.abs(d) <= tol):
        return "constant", max_violation
    if np.all(d < -tol):
        return "strictly_decreasing", max_violation
    if np.all(d <= tol):
        return "nonincreasing", max_violation
    if np.all(d >= -tol):
        return "increasing", max_violation
    return "mixed", max_violation


def _workers() -> int:
    try:
        return max(1, int(os.environ.get("CHEEGER_LAB_THREADS", "1")))
    except ValueError:
        return 1


def _scan_point(args):
    b, t = args
    bt = parallel_body(b, t)
    res = cheeger(bt)
    A = bt.area
    return A, bt.perimeter, bt.inradius, res.h, math.sqrt(A) * res.h


def _map(fn, items):
    n = _workers()
    if n > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=n) as ex:
            return list(ex.map(fn, items))
    return [fn(x) for x in items]


def scan_scaled_cheeger(b: RoundedBody, t_min: float, t_max: float, n_pts: int = 64,
                        tol: float = TOL_SCAN) -> ScanSeries:
    """Sample ``t -> sqrt(|b_t|) h(b_t)`` on a uniform grid."""
    if n_pts < 8:
        raise ValueError("a scan needs at least 8 points")
    if not -b.inradius < t_min < t_max:
        raise GeometryError(f"scan range must satisfy -r < t_min < t_max (r = {b.inradius})")
    ts = np.linspace(t_min, t_max, n_pts)
    return _scan_on(b, ts, tol)


def _scan_on(b, ts, tol=TOL_SCAN):
    rows = np.array(_map(_scan_point, [(b, float(t)) for t in ts]))
    verdict, viol = classify(rows[:, 4], tol)
    cols = {"area": rows[:, 0], "perimeter": rows[:, 1], "inradius": rows[:, 2], "h": rows[:, 3]}
    return ScanSeries(np.asarray(ts, dtype=float), rows[:, 4], verdict, viol, cols)


def _default_range(b):
    r = b.inradius
    return -r * (1.0 - 1e-6), r


def check_scaled_cheeger_monotonicity(b: RoundedBody, n_pts: int = 64, t_min: float | None = None,
                                      t_max: float | None = None, tol: float = TOL_SCAN) -> CheckReport:
    """``sqrt|b_t| h(b_t)`` is constant below ``tau`` and strictly decreasing above it."""
    name = "scaled_cheeger_monotonicity"
    lo, hi = _default_range(b)
    t_min = lo if t_min is None else t_min
    t_max = hi if t_max is None else t_max
    scan = scan_scaled_cheeger(b, t_min, t_max, n_pts, tol)
    ts, v = scan.t_values, scan.values
    scale = float(np.max(np.abs(v)))
    if b.is_disk:
        target = 2.0 * math.sqrt(math.pi)
        dev = float(np.max(np.abs(v - target))) / target
        k = int(np.argmax(np.abs(v - target)))
        return CheckReport(name, dev <= TOL_EQUALITY, (float(ts[k]), float(v[k]), target), TOL_EQUALITY,
                           violation=dev, details={"verdict": scan.verdict})
    tau_b = tau(b)
    step = ts[1] - ts[0]
    d = np.diff(v) / scale
    below = ts[1:] < tau_b
    above = ts[:-1] > tau_b + step
    ok_nonincr = scan.max_violation <= tol
    ok_const = bool(np.all(np.abs(d[below]) <= tol))
    ok_strict = bool(np.all(d[above] < -tol))
    k = int(np.argmax(d))
    return CheckReport(
        name, ok_nonincr and ok_const and ok_strict,
        (float(ts[k + 1]), float(v[k + 1]), float(v[k])), tol, violation=scan.max_violation,
        details={"verdict": scan.verdict, "tau": tau_b, "constant_below_tau": ok_const,
                 "strict_above_tau": ok_strict, "n_below": int(below.sum()), "n_above": int(above.sum())})


# --------------------------------------------------------------------------
# Inner parallel body inequalities
# --------------------------------------------------------------------------


def _inner_grid(b, grid):
    r = b.inradius
    if grid is None:
        grid = r * np.linspace(0.0, 1.0, 17)[:-1]
    grid = np.asarray(grid, dtype=float)
    if np.any(grid < 0.0) or np.any(grid >= r):
        raise GeometryError("grid must lie in [0, r)")
    return grid


def _dichotomy_report(name, b, ts, lhs, rhs, tol):
    """Inequality plus the tangential equality dichotomy on ``t > 0``."""
    lhs = np.asarray(lhs, dtype=float)
    rhs = np.asarray(rhs, dtype=float)
    tangential = is_tangential_body(b)
    rep = _ge_report(name, ts, lhs, rhs, tol)
    gap = (lhs - rhs) / np.maximum(np.abs(rhs), 1e-300)
    inner = ts > 0.0
    equality = bool(np.all(np.abs(gap[inner]) <= TOL_EQUALITY))
    strict = bool(np.all(gap[inner] > TOL_EQUALITY))
    dichotomy = equality if tangential else strict
    details = {"tangential": tangential, "equality": equality, "strict": strict,
               "max_gap": float(np.max(np.abs(gap[inner]))) if inner.any() else 0.0,
               "min_gap": float(np.min(gap[inner])) if inner.any() else 0.0}
    return CheckReport(name, rep.passed and dichotomy, rep.witness, tol, rep.violation, details=details)


def _inner_values(b, ts):
    areas, perims = [], []
    for t in ts:
        bt = parallel_body(b, -t) if t > 0.0 else b
        areas.append(bt.area)
        perims.append(bt.perimeter)
    return np.array(areas), np.array(perims)


def check_matheron(b: RoundedBody, grid=None, tol: float = 1e-12) -> CheckReport:
    """``|b_{-t}| >= |b| (1 - t/r)^2``."""
    ts = _inner_grid(b, grid)
    A, _ = _inner_values(b, ts)
    rhs = b.area * (1.0 - ts / b.inradius) ** 2
    return _dichotomy_report("matheron", b, ts, A, rhs, tol)


def check_larson(b: RoundedBody, grid=None, tol: float = 1e-12) -> CheckReport:
    """``P(b_{-t}) >= P(b) (1 - t/r)``."""
    ts = _inner_grid(b, grid)
    _, P = _inner_values(b, ts)
    rhs = b.perimeter * (1.0 - ts / b.inradius)
    return _dichotomy_report("larson", b, ts, P, rhs, tol)


def check_isoperimetric(b: RoundedBody, grid=None, tol: float = 1e-12) -> CheckReport:
    """``P(b_{-t}) / P(b) >= (|b_{-t}| / |b|)^(1/2)``."""
    ts = _inner_grid(b, grid)
    A, P = _inner_values(b, ts)
    return _dichotomy_report("isoperimetric_quotient", b, ts, P / b.perimeter,
                             np.sqrt(A / b.area), tol)


def check_inner_area_comparison(b: RoundedBody, c: float, n_pts: int = 32,
                                tol: float = 0.0) -> CheckReport:
    """Unit-area normalizations: ``|(b/sqrt|b|)_{-t}| > |(b_{-c}/sqrt|b_{-c}|)_{-t}|``."""
    name = "inner_area_comparison"
    if is_tangential_body(b):
        return _skipped(name, "body is tangential")
    r = b.inradius
    if not 0.0 < c < r:
        raise GeometryError(f"c must lie in (0, {r})")
    bc = parallel_body(b, -c)
    A, Ac = b.area, bc.area
    ts = np.linspace(0.0, r / math.sqrt(A), n_pts + 2)[1:-1]

    def inner(body, depth):
        if depth >= body.inradius:
            return 0.0
        return parallel_body(body, -depth).area if depth > 0.0 else body.area

    lhs = np.array([inner(b, t * math.sqrt(A)) / A for t in ts])
    rhs = np.array([inner(bc, t * math.sqrt(Ac)) / Ac for t in ts])
    margin = lhs - rhs
    k = int(np.argmin(margin))
    return CheckReport(name, bool(np.all(margin > tol)), (float(ts[k]), float(lhs[k]), float(rhs[k])),
                       tol, violation=max(-float(margin[k]), 0.0), details={"c": c})


# --------------------------------------------------------------------------
# Cheeger-set inequalities
# --------------------------------------------------------------------------


def check_contact_bounds(b: RoundedBody, tol: float = 1e-12) -> CheckReport:
    """Contact-length lower bounds for the Cheeger set.

    * ``contact / P(b) >= |C| / (2 |b|)``
    * ``contact >= P(C) / 2``
    * ``h >= P(b) / (2 |b|)``
    """
    res = cheeger(b)
    A, P = b.area, b.perimeter
    pairs = {
        "contact_vs_area_ratio": (res.contact_length / P, 0.5 * res.area_C / A),
        "contact_vs_half_perimeter": (res.contact_length, 0.5 * res.perimeter_C),
        "h_vs_half_isoperimetric": (res.h, 0.5 * P / A),
    }
    worst_name, worst = None, -math.inf
    for key, (lhs, rhs) in pairs.items():
        v = (rhs - lhs) / max(abs(lhs), abs(rhs))
        if v > worst:
            worst_name, worst = key, v
    lhs, rhs = pairs[worst_name]
    ratio_lhs, ratio_rhs = pairs["contact_vs_area_ratio"]
    details = {k: {"lhs": l, "rhs": r} for k, (l, r) in pairs.items()}
    details["equality_gap"] = ratio_lhs - ratio_rhs
    details["worst"] = worst_name
    details["tangential"] = is_tangential_body(b)
    return CheckReport("contact_bounds", worst <= tol, (0.0, lhs, rhs), tol,
                       violation=max(worst, 0.0), details=details)


def check_brunn_minkowski_h(b: RoundedBody, grid=(0.1, 0.5, 2.0), tol: float = 1e-12) -> CheckReport:
    """``1/h(b + tB) >= 1/h(b) + t/2``, equality for disks."""
    ts = np.asarray(grid, dtype=float)
    if np.any(ts < 0.0):
        raise GeometryError("grid must be nonnegative")
    inv0 = 1.0 / cheeger(b).h
    lhs = np.array([1.0 / cheeger(parallel_body(b, t)).h for t in ts])
    rhs = inv0 + 0.5 * ts
    rep = _ge_report("brunn_minkowski_cheeger", ts, lhs, rhs, tol)
    gap = float(np.max(np.abs(lhs - rhs) / rhs))
    ok = rep.passed and (gap <= TOL_EQUALITY if b.is_disk else True)
    return CheckReport(rep.name, ok, rep.witness, tol, rep.violation,
                       details={"max_relative_gap": gap, "disk": b.is_disk})


_FUNCTIONALS = {
    "area": (lambda bt: bt.area, 2),
    "perimeter": (lambda bt: bt.perimeter, 1),
    "inv_cheeger": (lambda bt: 1.0 / cheeger(bt).h, 1),
}


def check_general_monotonicity(b: RoundedBody, functional: str, grid=None,
                               tol: float = TOL_SCAN) -> CheckReport:
    """``J(b_t) / r(b_t)^alpha`` is nonincreasing in ``t``.

    For area and perimeter, the inner values also exceed the value at ``t = 0``
    strictly unless the body is tangential, in which case they coincide.
    """
    if functional not in _FUNCTIONALS:
        raise ValueError(f"unknown functional {functional!r}; expected one of {sorted(_FUNCTIONALS)}")
    J, alpha = _FUNCTIONALS[functional]
    r = b.inradius
    if grid is None:
        grid = np.unique(np.concatenate([np.linspace(-r * (1.0 - 1e-6), 0.0, 17), np.linspace(0.0, r, 9)]))
    ts = np.asarray(grid, dtype=float)
    if np.any(ts <= -r):
        raise GeometryError("grid must lie in (-r, inf)")
    vals = []
    for t in ts:
        bt = parallel_body(b, t) if t != 0.0 else b
        vals.append(J(bt) / bt.inradius ** alpha)
    vals = np.array(vals)
    verdict, viol = classify(vals, tol)
    psi0 = J(b) / r ** alpha
    inner = ts < 0.0
    rel = (vals[inner] - psi0) / psi0
    tangential = is_tangential_body(b)
    details = {"verdict": verdict, "tangential": tangential, "functional": functional,
               "inner_min_excess": float(np.min(rel)) if inner.any() else 0.0,
               "inner_max_excess": float(np.max(np.abs(rel))) if inner.any() else 0.0}
    ok = viol <= tol
    if functional != "inv_cheeger" and inner.any():
        # r(b_t) = r + t loses ~1e-10 relative accuracy next to the collapse, hence tol
        dichotomy = bool(np.all(np.abs(rel) <= tol)) if tangential else bool(np.all(rel > tol))
        details["dichotomy"] = dichotomy
        ok = ok and dichotomy
    d = np.diff(vals)
    k = int(np.argmax(d))
    return CheckReport(f"inradius_normalized_{functional}", ok, (float(ts[k + 1]), float(vals[k + 1]), float(vals[k])),
                       tol, violation=viol, details=details)


def check_inradius_derivative_bounds(b: RoundedBody, tol: float = 1e-12) -> CheckReport:
    """Derivative bounds obtained from the inradius-normalized monotonicity.

    * ``P <= 2 |b| / r`` (equality iff tangential)
    * ``P >= 2 pi r`` (checked for bodies with rounded corners)
    * ``h^2 - h / r <= 2 pi / |C|``
    """
    res = cheeger(b)
    A, P, r, h = b.area, b.perimeter, b.inradius, res.h
    tangential = is_tangential_body(b)
    items = {"perimeter_area_inradius": (2.0 * A / r, P)}
    if b.radius > 0.0:
        items["perimeter_inradius"] = (P, 2.0 * math.pi * r)
    items["cheeger_curvature"] = (2.0 * math.pi / res.area_C, h * h - h / r)
    worst_name, worst = None, -math.inf
    for key, (lhs, rhs) in items.items():
        v = (rhs - lhs) / max(abs(lhs), abs(rhs))
        if v > worst:
            worst_name, worst = key, v
    big, small = items["perimeter_area_inradius"]
    gap = (big - small) / big
    equality_ok = gap <= TOL_EQUALITY if tangential else gap > TOL_EQUALITY
    details = {k: {"lhs": l, "rhs": rr} for k, (l, rr) in items.items()}
    details.update(worst=worst_name, tangential=tangential, perimeter_gap=gap)
    lhs, rhs = items[worst_name]
    return CheckReport("inradius_derivative_bounds", worst <= tol and equality_ok, (0.0, lhs, rhs), tol,
                       violation=max(worst, 0.0), details=details)


def local_min_demo(b: RoundedBody, tol: float = TOL_EQUALITY) -> CheckReport:
    """Outer parallel bodies lower ``sqrt|b| h``; lower bound ``P/(2 sqrt|b|) + sqrt(pi)``."""
    name = "local_min_demo"
    if b.is_disk:
        return _skipped(name, "body is a disk")
    r = b.inradius
    base = scaled_invariant(b)
    ts = np.array([0.01 * r, 0.1 * r, r])
    vals = np.array([scaled_invariant(parallel_body(b, t)) for t in ts])
    decreases = bool(np.all(vals < base))
    A = b.area
    bound = b.perimeter / (2.0 * math.sqrt(A)) + math.sqrt(math.pi)
    gap = (base - bound) / base
    tangential = is_tangential_body(b)
    bound_ok = abs(gap) <= tol if tangential else gap > tol
    k = int(np.argmax(vals))
    return CheckReport(name, decreases and bound_ok and gap >= -tol, (float(ts[k]), float(vals[k]), base), tol,
                       violation=max(float(np.max(vals - base)) / base, 0.0),
                       details={"lower_bound": bound, "invariant": base, "bound_gap": gap,
                                "tangential": tangential, "decreases": decreases})


# --------------------------------------------------------------------------
# Reproductions
# --------------------------------------------------------------------------


def tailed_scaled_energy(t: float, eps: float) -> float:
    """``|D_{-t}| h(D_{-t})^2`` for the unit square with a thin tail of height ``eps``.

    The Cheeger set of the eroded tailed domain is that of the eroded square,
    whose constant is ``(2 + sqrt(pi)) / (1 - 2t)``.
    """
    k = (2.0 + math.sqrt(math.pi)) / (1.0 - 2.0 * t)
    return ((1.0 - 2.0 * t) ** 2 + (eps - 2.0 * t) * (1.0 - t)) * k * k


def repro_tailed_counterexample(eps: float = 0.1, grid=None, slope_t: float = 1e-4,
                                slope_tol: float = 0.05) -> CheckReport:
    """The scaled Cheeger quantity drops under erosion of a non-convex tailed domain."""
    if not 0.0 < eps < 0.5:
        raise GeometryError("eps must lie in (0, 0.5)")
    ts = np.linspace(0.0, eps / 4.0, 26)[1:] if grid is None else np.asarray(grid, dtype=float)
    if np.any(ts <= 0.0) or np.any(ts > eps / 4.0):
        raise GeometryError("grid must lie in (0, eps/4]")
    F0 = tailed_scaled_energy(0.0, eps)
    F = np.array([tailed_scaled_energy(t, eps) for t in ts])
    rep = _ge_report("tailed_counterexample", ts, np.full_like(F, F0), F, 0.0)
    strict = bool(np.all(F < F0))
    c2 = (2.0 + math.sqrt(math.pi)) ** 2
    slope_expected = c2 * (3.0 * eps - 2.0)
    slope = (tailed_scaled_energy(slope_t, eps) - F0) / slope_t
    slope_err = abs(slope - slope_expected) / abs(slope_expected)
    return CheckReport(rep.name, strict and slope_err <= slope_tol, rep.witness, slope_tol, rep.violation,
                       details={"F0": F0, "eps": eps, "slope": slope, "slope_expected": slope_expected,
                                "slope_relative_error": slope_err, "strict_decrease": strict})


QUADRILATERAL_Q = ((-1.0, 0.0), (1.0, 0.0), (0.01, 0.99), (-0.01, 0.99))


def quadrilateral_q() -> RoundedBody:
    """Quadrilateral cut from the triangle ``(-1,0), (1,0), (0,1)`` below ``y = 0.99``."""
    return polygon(QUADRILATERAL_Q)


def repro_quad_scaling(grid=None, tol: float = 1e-8) -> CheckReport:
    """``h(Q_{-t}) (1 - t / r(Q)) = h(Q)``: Q shares its Cheeger sets with a triangle."""
    Q = quadrilateral_q()
    r = Q.inradius
    ts = np.linspace(0.0, 0.6 * r, 17)[1:] if grid is None else np.asarray(grid, dtype=float)
    if np.any(ts < 0.0) or np.any(ts > 0.6 * r):
        raise GeometryError("grid must lie in [0, 0.6 r(Q)]")
    h0 = cheeger(Q).h
    lhs = np.array([cheeger(parallel_body(Q, -t)).h * (1.0 - t / r) if t > 0 else h0 for t in ts])
    err = np.abs(lhs - h0) / h0
    k = int(np.argmax(err))
    return CheckReport("quad_scaling", bool(np.all(err <= tol)), (float(ts[k]), float(lhs[k]), h0), tol,
                       violation=float(err[k]), details={"h_Q": h0, "r_Q": r, "n": int(ts.size)})


def repro_rectangle_ratio(grid=None, tol: float = 1e-9) -> CheckReport:
    """``h / sqrt(lambda_1)`` decreases along inner parallel bodies of the 2x1 rectangle."""
    ts = np.linspace(0.0, 0.5, 258)[1:-1] if grid is None else np.asarray(grid, dtype=float)
    if np.any(ts <= 0.0) or np.any(ts >= 0.5):
        raise GeometryError("grid must lie in (0, 0.5)")
    q0 = spectral.ratio_lambda_h(0.0)
    q = np.array([spectral.ratio_lambda_h(t) for t in ts])
    below_start = bool(np.all(q < q0))
    strict = bool(np.all(np.diff(q) < 0.0))
    # closed form of h against the solver, and the two forms of lambda_1
    t_chk = 0.25
    h_closed = spectral.cheeger_rect2x1_printed(t_chk)
    h_solver = cheeger(parallel_body(rectangle(2.0, 1.0), -t_chk)).h
    h_err = abs(h_closed - h_solver) / h_solver
    lam_err = max(abs(spectral.lambda1_rect2x1_printed(t)
                      - spectral.lambda1_rectangle(spectral.RectSpec(2 - 2 * t, 1 - 2 * t)))
                  / spectral.lambda1_rect2x1_printed(t) for t in np.linspace(0.0, 0.49, 64))
    k = int(np.argmax(q))
    ok = below_start and strict and h_err <= tol and lam_err <= 1e-12
    return CheckReport("rectangle_ratio", ok, (float(ts[k]), float(q[k]), q0), tol,
                       violation=max(float(np.max(q - q0)) / q0, 0.0),
                       details={"ratio_at_0": q0, "strictly_decreasing": strict, "below_start": below_start,
                                "h_closed_vs_solver": h_err, "lambda_forms_max_rel_diff": lam_err})


def repro_thin_rectangle(eps: float = 0.01) -> CheckReport:
    """The eigenvalue perturbation condition holds for thin rectangles only."""
    thin = spectral.RectSpec(eps, 1.0)
    unit = spectral.RectSpec(1.0, 1.0)
    m_thin = spectral.eigenvalue_condition_margin(thin)
    m_unit = spectral.eigenvalue_condition_margin(unit)
    threshold = spectral.eigenvalue_condition_threshold()
    ok = m_thin > 0.0 and m_unit < 0.0
    lhs = math.sqrt(spectral.lambda1_rectangle(thin))
    return CheckReport("thin_rectangle_condition", ok, (eps, lhs, lhs - m_thin), 0.0,
                       violation=max(-m_thin, 0.0),
                       details={"margin_thin": m_thin, "margin_unit_square": m_unit,
                                "threshold_aspect_ratio": threshold})


def repro_bessel(n_max: int = 1000) -> CheckReport:
    """``j_n / n < pi / 2``: tabulated ``j_2`` and the Airy-type bound for ``n >= 3``."""
    ns = np.arange(3, n_max + 1)
    bounds = np.array([spectral.bessel_upper_bound(int(n)) for n in ns])
    rhs = 0.5 * math.pi * ns
    sweep_ok = spectral.bessel_bound_check(n_max)
    j2_ok = spectral.J2 < 2.406 < math.pi
    k = int(np.argmax(bounds / rhs))
    return CheckReport("bessel_bound", sweep_ok and j2_ok, (float(ns[k]), float(bounds[k]), float(rhs[k])), 0.0,
                       violation=max(float(np.max(bounds - rhs)), 0.0),
                       details={"n_max": n_max, "j2": spectral.J2, "j2_check": j2_ok,
                                "max_bound_ratio": float(np.max(bounds / rhs))})


REPRO_NAMES = ("tailed", "rect-ratio", "quad-scaling", "thin-rect", "bessel")


def run_repro(name: str, **kwargs) -> CheckReport:
    funcs = {
        "tailed": repro_tailed_counterexample,
        "rect-ratio": repro_rectangle_ratio,
        "quad-scaling": repro_quad_scaling,
        "thin-rect": repro_thin_rectangle,
        "bessel": repro_bessel,
    }
    if name not in funcs:
        raise ValueError(f"unknown reproduction {name!r}; expected one of {list(REPRO_NAMES)}")
    return funcs[name](**kwargs)


# --------------------------------------------------------------------------
# Corpus and default suite
# --------------------------------------------------------------------------


def default_corpus() -> dict[str, RoundedBody]:
    return {
        "unit_square": square(1.0),
        "rect_2x1": rectangle(2.0, 1.0),
        "equilateral_triangle": regular_polygon(3, 1.0),
        "regular_pentagon": regular_polygon(5, 1.0),
        "regular_hexagon": regular_polygon(6, 1.0),
        "right_triangle": triangle((0, 0), (1, 0), (0, 1)),
        "quadrilateral_q": quadrilateral_q(),
        "disk": disk(1.0),
        "rounded_square": square(1.0, radius=0.3),
        "stadium": stadium(1.0, 0.5),
    }


def run_suite(b: RoundedBody, n_pts: int = 64, tol: float = TOL_SCAN) -> list[CheckReport]:
    """Default battery of checks for one body, ordered by name."""
    r = b.inradius
    reports = [
        check_scaled_cheeger_monotonicity(b, n_pts=n_pts, tol=tol),
        check_matheron(b),
        check_larson(b),
        check_isoperimetric(b),
        check_inner_area_comparison(b, 0.25 * r),
        check_contact_bounds(b),
        check_brunn_minkowski_h(b),
        check_general_monotonicity(b, "area", tol=tol),
        check_general_monotonicity(b, "perimeter", tol=tol),
        check_general_monotonicity(b, "inv_cheeger", tol=tol),
        check_inradius_derivative_bounds(b),
        local_min_demo(b),
    ]
    return sorted(reports, key=lambda rep: rep.name)
