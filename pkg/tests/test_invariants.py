from fractions import Fraction

import pytest

from curvereg.ideals import Ideal, irrelevant_ideal, zero_ideal
from curvereg.invariants import (dim_deg, hilbert_function, hilbert_polynomial,
                                 hilbert_series, render_univariate,
                                 saturation_degree)
from curvereg.polyring import Ring


def standard_monomial_count(J, d):
    leads = J.gb().lead_exponents()
    return sum(1 for m in J.ring.monomials_of_degree(d)
               if not any(all(a >= b for a, b in zip(m, l)) for l in leads))


@pytest.fixture
def P3():
    return Ring(4)


@pytest.fixture
def twisted_cubic(P3):
    return Ideal(P3, [P3.parse(t) for t in ("x1^2 - x0*x2", "x1*x2 - x0*x3", "x2^2 - x1*x3")])


def test_zero_ideal_series(P3):
    H = hilbert_series(zero_ideal(P3))
    assert H.numerator == (1,)
    assert (H.krull_dim, H.degree) == (4, 1)
    assert hilbert_function(zero_ideal(P3), 1) == 4
    assert hilbert_function(zero_ideal(Ring(5)), 1) == 5


def test_hyperplane_series(P3):
    assert hilbert_series(Ideal(P3, [P3.gens[0]])).numerator == (1, -1)


def test_twisted_cubic_series(twisted_cubic):
    H = hilbert_series(twisted_cubic)
    assert H.reduced == (1, 2)
    assert H.krull_dim == 2
    assert [H.hilbert_function(d) for d in range(6)] == [1, 4, 7, 10, 13, 16]
    for d in range(6):
        assert standard_monomial_count(twisted_cubic, d) == H.hilbert_function(d)
    assert hilbert_function(twisted_cubic, 2) == 7
    assert hilbert_polynomial(twisted_cubic) == (Fraction(1), Fraction(3))
    assert dim_deg(twisted_cubic) == (1, 3)


def test_irrelevant_ideal_has_no_points(P3):
    m = irrelevant_ideal(P3)
    assert all(hilbert_function(m, d) == 0 for d in range(1, 5))
    assert hilbert_polynomial(m) == ()


def test_line_and_point(P3):
    line = Ideal(P3, P3.gens[2:])
    point = Ideal(P3, P3.gens[1:])
    assert hilbert_polynomial(line) == (1, 1)
    assert hilbert_polynomial(point) == (1,)
    assert dim_deg(point) == (0, 1)
    assert dim_deg(Ideal(P3, [P3.one()])) == (-1, 0)


def test_saturation_degree():
    R = Ring(2)
    x0, x1 = R.gens
    assert saturation_degree(Ideal(R, [x0**2, x0 * x1])) == 2
    assert saturation_degree(Ideal(R, [x0**2, x0 * x1, x1**2])) == 2
    assert saturation_degree(Ideal(R, [x0])) == 0


def test_hilbert_series_is_order_independent(twisted_cubic):
    from curvereg.invariants import monomial_numerator
    from curvereg.polyring import MonomialOrder
    lex = twisted_cubic.gb(MonomialOrder("lex")).lead_exponents()
    assert tuple(monomial_numerator(lex)) == hilbert_series(twisted_cubic).numerator


def test_render_univariate():
    assert render_univariate([1, -4, 0, 1]) == "1 - 4t + t^3"
    assert render_univariate([Fraction(1, 2), 1]) == "1/2 + t"
    assert render_univariate([]) == "0"
