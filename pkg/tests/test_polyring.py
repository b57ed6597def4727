from fractions import Fraction

import pytest

from curvereg.polyring import (GF32003, Field, MonomialOrder, Ring, mono_cmp,
                               poly_eval, poly_mul)

GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


@pytest.fixture
def R5():
    return Ring(5)


def test_field_rejects_composite_modulus():
    with pytest.raises(ValueError, match="not prime"):
        Field(32004)
    assert Field(7)(10) == 3
    assert Field(None)(Fraction(1, 2)) == Fraction(1, 2)


def test_field_inverse_and_symmetric_lift():
    F = Field(7)
    assert F.inv(3) * 3 % 7 == 1
    with pytest.raises(ZeroDivisionError):
        F.inv(0)
    assert GF32003.symmetric(32002) == -1


@pytest.mark.parametrize("a, b, expected", [
    ((1, 0, 0), (0, 1, 0), 1),        # x0 > x1
    ((1, 0, 1), (0, 2, 0), -1),       # x0*x2 < x1^2
    ((2, 1, 0), (1, 2, 0), 1),        # x0^2*x1 > x0*x1^2
    ((1, 1, 0), (1, 1, 0), 0),
])
def test_grevlex_comparisons(a, b, expected):
    assert mono_cmp(GREVLEX, a, b) == expected


def test_lex_versus_grevlex():
    # x1^2 beats x0 only when degree comes first
    assert mono_cmp(GREVLEX, (0, 2, 0), (1, 0, 0)) == 1
    assert mono_cmp(LEX, (0, 2, 0), (1, 0, 0)) == -1


def test_unknown_order_rejected():
    with pytest.raises(ValueError):
        MonomialOrder("deglex")


def test_products(R5):
    x0, x1, x2, x3, x4 = R5.gens
    assert poly_mul(x0 + x1, x0 + x1) == x0**2 + 2 * x0 * x1 + x1**2
    assert poly_mul(x0 + x1, R5.zero()).is_zero()
    assert poly_mul(x2**2, x2) == x2**3


def test_evaluation_at_fixed_points(R5):
    x0, x1, x2, x3, x4 = R5.gens
    assert poly_eval(x2**2 - x1 * x3, (0, 1, 0, 0, 0)) == 0
    assert poly_eval(x0, (1, 0, 0, 0, 0)) == 1
    assert poly_eval(x0 + x1 + x2, (0, 1, 0, 0, 0)) == 1


def test_parse_and_render_round_trip(R5):
    f = R5.parse("x0^2*x1 - 3*x4 + 2")
    assert R5.parse(f.render()) == f
    assert R5.parse("(x0+x1)**2") == R5.parse("x0^2 + 2*x0*x1 + x1^2")
    with pytest.raises(ValueError):
        R5.parse("x0 +* x1")


def test_coefficients_reduce_mod_p():
    R = Ring(2, Field(5))
    x, y = R.gens
    assert (5 * x + y).render() == "x1"
    assert (3 * x) * (2 * x) == x**2


def test_degree_and_homogeneity(R5):
    x0, x1, *_ = R5.gens
    assert (x0**3 + x1).degree() == 3
    assert not (x0**3 + x1).is_homogeneous()
    assert (x0 * x1 - x1**2).is_homogeneous()


def test_substitute_and_exact_division(R5):
    x0, x1, x2, *_ = R5.gens
    f = x0**2 - x1**2
    assert f.divide_exact(x0 - x1) == x0 + x1
    g = f.substitute([x2, x2, x2, R5.zero(), R5.zero()])
    assert g.is_zero()
    with pytest.raises(ValueError):
        f.divide_exact(x2)


def test_monomials_of_degree_count(R5):
    assert len(R5.monomials_of_degree(2)) == 15
    assert R5.monomials_of_degree(0) == [(0,) * 5]
