import math

import numpy as np
import pytest

from cheeger_lab import verify
from cheeger_lab.geom import GeometryError, disk, rectangle, regular_polygon, square, stadium
from cheeger_lab.verify import classify, default_corpus, quadrilateral_q

CORPUS = default_corpus()


def test_classify_verdicts():
    assert classify([1, 1, 1])[0] == "constant"
    assert classify([3, 2, 1])[0] == "strictly_decreasing"
    assert classify([3, 2, 2])[0] == "nonincreasing"
    assert classify([1, 2, 2])[0] == "increasing"
    assert classify([1, 2, 1])[0] == "mixed"
    assert classify([1, 2, 1])[1] == pytest.approx(0.5)


def test_scan_rectangle_strictly_decreasing():
    s = verify.scan_scaled_cheeger(rectangle(2, 1), -0.45, 1.0, 64)
    assert s.verdict == "strictly_decreasing"
    assert len(s.t_values) == 64 and np.all(np.diff(s.t_values) > 0)


def test_scan_triangle_constant_inside():
    s = verify.scan_scaled_cheeger(regular_polygon(3, 1.0), -0.25, 0.0, 32)
    assert s.verdict == "constant"
    assert np.allclose(s.values, 4.0519611, rtol=1e-7)


def test_scan_disk_constant():
    s = verify.scan_scaled_cheeger(disk(1.0), -0.9, 3.0, 16)
    assert s.verdict == "constant"
    assert np.allclose(s.values, 2 * math.sqrt(math.pi), rtol=1e-10)


def test_scan_preconditions():
    with pytest.raises(GeometryError):
        verify.scan_scaled_cheeger(square(1.0), -0.6, 0.0, 16)
    with pytest.raises(ValueError):
        verify.scan_scaled_cheeger(square(1.0), -0.1, 0.0, 4)


def test_scan_parallel_matches_serial(monkeypatch):
    serial = verify.scan_scaled_cheeger(quadrilateral_q(), -0.3, 0.5, 16)
    monkeypatch.setenv("CHEEGER_LAB_THREADS", "2")
    par = verify.scan_scaled_cheeger(quadrilateral_q(), -0.3, 0.5, 16)
    assert np.array_equal(serial.values, par.values)
    assert serial.verdict == par.verdict


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_default_suite_passes(name):
    reports = verify.run_suite(CORPUS[name])
    assert [r.name for r in reports] == sorted(r.name for r in reports)
    failed = [r.name for r in reports if not r.passed]
    assert not failed


def test_matheron_larson_dichotomy():
    for check in (verify.check_matheron, verify.check_larson, verify.check_isoperimetric):
        sq = check(square(1.0))
        assert sq.passed and sq.details["equality"]
        pent = check(regular_polygon(5, 1.0))
        assert pent.passed and pent.details["equality"]
        rect = check(rectangle(2, 1))
        assert rect.passed and rect.details["strict"]


def test_matheron_grid_domain():
    with pytest.raises(GeometryError):
        verify.check_matheron(square(1.0), grid=[0.0, 0.5])


def test_inner_area_comparison():
    assert verify.check_inner_area_comparison(rectangle(2, 1), 0.2).passed
    assert verify.check_inner_area_comparison(quadrilateral_q(), 0.1).passed
    rep = verify.check_inner_area_comparison(regular_polygon(3, 1.0), 0.1)
    assert rep.skipped


def test_contact_bounds_equality_gap():
    sq = verify.check_contact_bounds(square(1.0))
    assert sq.passed and abs(sq.details["equality_gap"]) < 1e-9
    lhs = sq.details["contact_vs_area_ratio"]["lhs"]
    assert math.isclose(lhs, 0.4698411, rel_tol=1e-6)
    rect = verify.check_contact_bounds(rectangle(2, 1))
    assert rect.passed and rect.details["equality_gap"] > 1e-3
    d = verify.check_contact_bounds(disk(1.0))
    assert d.passed and d.details["contact_vs_area_ratio"]["lhs"] == pytest.approx(1.0)


def test_brunn_minkowski():
    sq = verify.check_brunn_minkowski_h(square(1.0), grid=[1.0])
    assert sq.passed and sq.witness[1] > 0.2650794 + 0.5
    d = verify.check_brunn_minkowski_h(disk(1.0), grid=[0.1, 0.5, 2.0, 10.0])
    assert d.passed and d.details["max_relative_gap"] < 1e-10


def test_general_monotonicity_examples():
    area = verify.check_general_monotonicity(rectangle(2, 1), "area",
                                             grid=np.linspace(-0.49, 0.0, 20))
    assert area.passed and area.details["verdict"] == "strictly_decreasing"
    per = verify.check_general_monotonicity(square(1.0), "perimeter", grid=np.linspace(-0.49, 0.0, 20))
    assert per.passed and per.details["verdict"] == "constant"
    assert per.witness[1] == pytest.approx(8.0)
    inv = verify.check_general_monotonicity(rectangle(2, 1), "inv_cheeger")
    assert inv.passed
    with pytest.raises(ValueError):
        verify.check_general_monotonicity(square(1.0), "volume")


def test_inv_cheeger_not_strict_for_q():
    # Q's scaled Cheeger constant is preserved by erosion up to the 1 - t/r factor
    rep = verify.check_general_monotonicity(quadrilateral_q(), "inv_cheeger")
    assert rep.passed and rep.details["inner_max_excess"] < 1e-8


def test_inradius_derivative_bounds():
    sq = verify.check_inradius_derivative_bounds(square(1.0))
    assert sq.passed and sq.details["perimeter_gap"] == pytest.approx(0.0, abs=1e-15)
    rect = verify.check_inradius_derivative_bounds(rectangle(2, 1))
    assert rect.passed
    assert rect.details["perimeter_area_inradius"] == {"lhs": 8.0, "rhs": 6.0}
    rs = verify.check_inradius_derivative_bounds(square(1.0, 0.3))
    assert rs.passed and "perimeter_inradius" in rs.details


def test_local_min_demo():
    rect = verify.local_min_demo(rectangle(2, 1))
    assert rect.passed and rect.details["bound_gap"] > 0
    sq = verify.local_min_demo(square(1.0))
    assert sq.passed and abs(sq.details["bound_gap"]) < 1e-10
    assert verify.local_min_demo(disk(1.0)).skipped


def test_tailed_closed_form():
    eps = 0.1
    assert math.isclose(verify.tailed_scaled_energy(0.0, eps), 1.1 * (2 + math.sqrt(math.pi)) ** 2)
    rep = verify.repro_tailed_counterexample(eps)
    assert rep.passed and rep.details["slope_relative_error"] < 0.05
    with pytest.raises(GeometryError):
        verify.repro_tailed_counterexample(eps, grid=[0.05])


def test_repros_pass():
    for name in verify.REPRO_NAMES:
        assert verify.run_repro(name).passed, name
    with pytest.raises(ValueError):
        verify.run_repro("nope")


def test_report_serializes():
    d = verify.check_contact_bounds(square(1.0)).to_dict()
    assert set(d) == {"name", "passed", "skipped", "tolerance", "violation", "witness", "details"}
    assert isinstance(d["details"]["tangential"], bool)


def test_stadium_scan_tau():
    rep = verify.check_scaled_cheeger_monotonicity(stadium(1.0, 0.5))
    assert rep.passed and rep.details["tau"] == -0.5


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_corpus_scan_nonincreasing_tight(name):
    b = CORPUS[name]
    lo, hi = verify._default_range(b)
    assert verify.scan_scaled_cheeger(b, lo, hi, 64).max_violation <= 1e-10


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_verdict_stability(name):
    b = CORPUS[name]
    base = verify.check_scaled_cheeger_monotonicity(b)
    half_tol = verify.check_scaled_cheeger_monotonicity(b, tol=0.5 * verify.TOL_SCAN)
    dense = verify.check_scaled_cheeger_monotonicity(b, n_pts=128)
    for rep in (half_tol, dense):
        assert rep.passed == base.passed
        assert rep.details.get("strict_above_tau") == base.details.get("strict_above_tau")
