import math

import numpy as np
import pytest
from scipy import special

from cheeger_lab import spectral
from cheeger_lab.cheeger import cheeger
from cheeger_lab.geom import parallel_body, rectangle
from cheeger_lab.spectral import RectSpec


def test_constants_match_scipy():
    assert math.isclose(spectral.J2, special.jn_zeros(0, 1)[0], rel_tol=1e-15)
    assert math.isclose(spectral.AIRY_A1, special.ai_zeros(1)[0][0], rel_tol=1e-15)
    assert spectral.CONSTANTS.j2 == spectral.J2


def test_rectspec_validation():
    for a, b in [(0, 1), (-1, 1), (1, math.inf), (math.nan, 1)]:
        with pytest.raises(ValueError):
            RectSpec(a, b)


def test_lambda1_rectangle_examples():
    assert math.isclose(spectral.lambda1_rectangle(RectSpec(1, 1)), 2 * math.pi ** 2)
    assert math.isclose(spectral.lambda1_rectangle(RectSpec(2, 1)), 1.25 * math.pi ** 2)
    assert math.isclose(spectral.lambda1_rectangle(RectSpec(2, 1)), spectral.lambda1_rect2x1_printed(0.0))


def test_lambda1_homogeneity():
    base = spectral.lambda1_rectangle(RectSpec(2, 1))
    for g in (0.5, 3.0, 10.0):
        assert math.isclose(spectral.lambda1_rectangle(RectSpec(2 * g, g)), base / g ** 2, rel_tol=1e-14)


def test_printed_eigenvalue_matches_eroded_sides():
    for t in np.linspace(0.0, 0.49, 64):
        sides = spectral.lambda1_rectangle(RectSpec(2 - 2 * t, 1 - 2 * t))
        assert math.isclose(sides, spectral.lambda1_rect2x1_printed(t), rel_tol=1e-12)


def test_lambda1_disk():
    assert math.isclose(spectral.lambda1_disk(1.0), 5.7831860, rel_tol=1e-7)
    assert math.isclose(spectral.lambda1_disk(2.0), spectral.lambda1_disk(1.0) / 4, rel_tol=1e-15)
    assert spectral.lambda1_disk(1.0) < spectral.lambda1_rectangle(RectSpec(1, 1))


def test_cheeger_rectangle_closed_form_vs_solver():
    for a, b in [(2, 1), (1, 1), (5, 0.1), (1e-3, 1)]:
        assert math.isclose(spectral.cheeger_rectangle(a, b), cheeger(rectangle(a, b)).h, rel_tol=1e-10)


def test_printed_cheeger_form_vs_solver():
    for t in (0.0, 0.1, 0.25, 0.4):
        R = rectangle(2.0, 1.0)
        h = cheeger(parallel_body(R, -t) if t else R).h
        assert math.isclose(spectral.cheeger_rect2x1_printed(t), h, rel_tol=1e-9)


def test_ratio_examples():
    r0 = spectral.ratio_lambda_h(0.0)
    assert math.isclose(r0, 2.849368862 / (math.pi * math.sqrt(5) / 2), rel_tol=1e-9)
    assert math.isclose(r0, 0.81123, rel_tol=1e-5)
    assert spectral.ratio_lambda_h(0.2) < r0
    assert spectral.ratio_lambda_h(0.45) < spectral.ratio_lambda_h(0.4)


def test_ratio_strictly_decreasing():
    q = [spectral.ratio_lambda_h(t) for t in np.linspace(0.0, 0.499, 256)]
    assert np.all(np.diff(q) < 0)


def test_ratio_domain():
    for t in (-0.1, 0.5):
        with pytest.raises(ValueError):
            spectral.ratio_lambda_h(t)


def test_eigenvalue_condition():
    assert spectral.satisfies_eigenvalue_condition(RectSpec(0.01, 1))
    assert not spectral.satisfies_eigenvalue_condition(RectSpec(1, 1))
    assert math.isclose(spectral.eigenvalue_condition_margin(RectSpec(1, 1)),
                        math.sqrt(2) * math.pi - 2 * spectral.J2, rel_tol=1e-14)


def test_eigenvalue_condition_threshold_is_a_root():
    e = spectral.eigenvalue_condition_threshold()
    assert 0.01 < e < 1
    assert abs(spectral.eigenvalue_condition_margin(RectSpec(e, 1))) < 1e-10
    assert spectral.satisfies_eigenvalue_condition(RectSpec(0.99 * e, 1))
    assert not spectral.satisfies_eigenvalue_condition(RectSpec(1.01 * e, 1))


def test_bessel_bound_examples():
    assert math.isclose(spectral.bessel_upper_bound(3), 3.2746, rel_tol=1e-4)
    assert spectral.bessel_bound_check(3)
    assert spectral.bessel_bound_check(1000)
    with pytest.raises(ValueError):
        spectral.bessel_bound_check(2)


@pytest.mark.parametrize("n", [3, 4, 6, 10, 40, 200])
def test_bessel_bound_exceeds_true_zero(n):
    true_zero = special.jn_zeros(n // 2 - 1, 1)[0] if n % 2 == 0 else None
    if true_zero is None:
        from scipy.optimize import brentq

        nu = n / 2 - 1
        xs = np.linspace(nu + 1e-6, nu + 10 + 3 * nu ** (1 / 3), 4000)
        vals = special.jv(nu, xs)
        k = int(np.argmax(np.sign(vals[:-1]) != np.sign(vals[1:])))
        true_zero = brentq(lambda x: special.jv(nu, x), xs[k], xs[k + 1])
    assert true_zero < spectral.bessel_upper_bound(n) < math.pi * n / 2
