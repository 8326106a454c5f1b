import math

import numpy as np
import pytest

import oracles
from cheeger_lab.cheeger import (
    DomainError,
    cheeger,
    derivative_fd,
    inner_area,
    inner_area_gap,
    polygon_derivative_identity,
    scaled_invariant,
    tangential_closed_form_h,
)
from cheeger_lab.geom import (
    GeometryError,
    RoundedBody,
    Segment,
    disk,
    parallel_body,
    polygon,
    rectangle,
    regular_polygon,
    scaled,
    square,
    stadium,
    triangle,
)
from cheeger_lab.verify import default_corpus, quadrilateral_q

H_SQUARE = 2.0 + math.sqrt(math.pi)
CORPUS = default_corpus()


# -- inner area gap ----------------------------------------------------------


def test_gap_vanishes_at_square_root():
    assert abs(inner_area_gap(square(1.0), 1.0 / H_SQUARE)) < 1e-12


def test_gap_limits():
    b = square(1.0)
    assert math.isclose(inner_area_gap(b, 1e-12), 1.0, rel_tol=1e-10)
    assert inner_area_gap(b, 0.5 - 1e-12) < 0.0


def test_gap_domain():
    with pytest.raises(DomainError):
        inner_area_gap(square(1.0), 0.0)
    with pytest.raises(DomainError):
        inner_area_gap(square(1.0), 0.5)


def test_disk_gap_root_is_half_radius():
    assert abs(inner_area_gap(disk(1.0), 0.5)) < 1e-14
    assert math.isclose(cheeger(disk(1.0)).h, 2.0, rel_tol=1e-12)


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_gap_brackets_a_sign_change(name):
    b = CORPUS[name]
    r = b.inradius
    assert inner_area_gap(b, 1e-9 * r) > 0.0 > inner_area_gap(b, r * (1 - 1e-9))


def test_inner_area_steiner_branch():
    b = square(1.0, 0.3)
    assert math.isclose(inner_area(b, 0.1), 1 + 4 * 0.2 + math.pi * 0.04, rel_tol=1e-15)
    assert inner_area(b, b.inradius) == 0.0


# -- Cheeger constant --------------------------------------------------------


def test_unit_square_values():
    res = cheeger(square(1.0))
    t = 1.0 / H_SQUARE
    assert math.isclose(res.h, H_SQUARE, rel_tol=1e-12)
    assert math.isclose(res.t_star, t, rel_tol=1e-12)
    assert math.isclose(res.area_C, 1 - (4 - math.pi) * t * t, rel_tol=1e-12)
    assert math.isclose(res.contact_length, res.h * res.area_C - 2 * math.pi * t, rel_tol=1e-10)
    assert math.isclose(res.contact_length, 1.8793644, rel_tol=1e-7)


def test_disk_cheeger_set_is_disk():
    res = cheeger(disk(1.5))
    assert math.isclose(res.h, 2 / 1.5, rel_tol=1e-12)
    assert res.cheeger_set == disk(1.5)
    assert math.isclose(res.contact_length, 3 * math.pi, rel_tol=1e-12)


def test_rectangle_value():
    h = (4 - math.pi) / (3 - math.sqrt(1 + 2 * math.pi))
    assert math.isclose(cheeger(rectangle(2, 1)).h, h, rel_tol=1e-10)


def test_equilateral_triangle_value():
    T = regular_polygon(3, 1.0)
    assert math.isclose(cheeger(T).h, tangential_closed_form_h(T), rel_tol=1e-10)
    assert math.isclose(cheeger(T).h, 6.157645, rel_tol=1e-6)


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_result_invariants(name):
    b = CORPUS[name]
    res = cheeger(b)
    assert math.isclose(res.h, 1 / res.t_star, rel_tol=1e-12)
    assert math.isclose(res.h, res.perimeter_C / res.area_C, rel_tol=1e-10)
    if res.t_star > b.radius:
        assert math.isclose(res.cheeger_set.radius, res.t_star)
    else:
        assert res.cheeger_set == b
    assert 0.0 <= res.contact_length <= min(res.perimeter_C, b.perimeter) * (1 + 1e-12)


@pytest.mark.parametrize("b", [square(1.0), rectangle(2, 1), regular_polygon(5, 1.0), quadrilateral_q(),
                               triangle((0, 0), (1, 0), (0, 1)), polygon(((0, 0), (4, 0), (5, 2), (3, 3), (0, 1))),
                               polygon(((0, 0), (10, 0), (10, 0.3), (5, 1), (0, 0.3)))])
def test_cheeger_matches_direct_minimization(b):
    assert math.isclose(cheeger(b).h, oracles.cheeger_by_minimization(b.kernel.vertices), rel_tol=1e-10)


def test_rectangle_closed_form_along_erosion():
    R = rectangle(2.0, 1.0)
    for t in np.arange(0.0, 0.46, 0.05):
        closed = (4 - math.pi) / (3 - 4 * t - math.sqrt(1 + math.pi * (1 - 2 * t) * (2 - 2 * t)))
        h = cheeger(parallel_body(R, -t) if t > 0 else R).h
        assert math.isclose(h, closed, rel_tol=1e-9)


@pytest.mark.parametrize("b", [square(1.0), regular_polygon(3, 2.0), triangle((0, 0), (5, 0), (1, 3))]
                         + [regular_polygon(n, 1.0) for n in range(4, 13)])
def test_tangential_closed_form(b):
    assert math.isclose(cheeger(b).h, tangential_closed_form_h(b), rel_tol=1e-10)


def test_tangential_closed_form_rejects_other_bodies():
    for b in (rectangle(2, 1), square(1.0, 0.2), stadium(1.0, 0.5)):
        with pytest.raises(GeometryError):
            tangential_closed_form_h(b)
    assert math.isclose(tangential_closed_form_h(disk(1.0)), 2.0)


def test_cheeger_needs_interior():
    with pytest.raises(GeometryError):
        cheeger(RoundedBody(Segment((0, 0), (1, 0)), 0.0))


# -- scale behaviour ---------------------------------------------------------


def test_scaled_invariant_examples():
    assert math.isclose(scaled_invariant(disk(3.0)), 2 * math.sqrt(math.pi), rel_tol=1e-12)
    assert math.isclose(scaled_invariant(square(1.0)), H_SQUARE, rel_tol=1e-12)
    assert math.isclose(scaled_invariant(square(7.0)), H_SQUARE, rel_tol=1e-12)


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_scale_equivariance(name):
    b = CORPUS[name]
    h = cheeger(b).h
    for g in (0.5, 3.0):
        assert math.isclose(cheeger(scaled(b, g)).h, h / g, rel_tol=1e-11)


# -- derivative at zero ------------------------------------------------------


@pytest.mark.parametrize("b", [square(1.0), rectangle(2, 1), regular_polygon(6, 1.0), quadrilateral_q(),
                               disk(1.0), square(1.0, 0.3), stadium(1.0, 0.5)])
def test_derivative_matches_finite_differences(b):
    res = cheeger(b)
    fd = derivative_fd(b, 1e-3 * b.inradius)
    assert math.isclose(fd, res.derivative_at_zero, rel_tol=1e-6)


def test_disk_derivative():
    assert math.isclose(cheeger(disk(2.0)).derivative_at_zero, -2 / 4, rel_tol=1e-12)


def test_square_derivative_value():
    assert math.isclose(cheeger(square(1.0)).derivative_at_zero, -7.5449077018, rel_tol=1e-9)


def test_derivative_fd_step_domain():
    with pytest.raises(DomainError):
        derivative_fd(square(1.0), 0.1)


@pytest.mark.parametrize("b", [square(1.0), rectangle(2, 1), regular_polygon(6, 1.0), quadrilateral_q()])
def test_polygon_derivative_identity(b):
    a, c = polygon_derivative_identity(b)
    assert math.isclose(a, c, rel_tol=1e-10)


def test_polygon_derivative_identity_needs_flat_contact():
    with pytest.raises(DomainError):
        polygon_derivative_identity(disk(1.0))


def test_to_dict_round_trip_fields():
    d = cheeger(square(1.0, 0.2)).to_dict()
    assert set(d) == {"h", "t_star", "area_C", "perimeter_C", "contact_length", "derivative_at_zero", "cheeger_set"}
    assert d["cheeger_set"]["kernel"] == "ConvexPolygon"
