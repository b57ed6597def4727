import itertools

import pytest

from curvereg.groebner import buchberger, normal_form
from curvereg.ideals import Ideal
from curvereg.polyring import MonomialOrder, Ring

LEX = MonomialOrder("lex")


@pytest.fixture
def P3():
    return Ring(4)


def twisted_cubic_gens(R):
    x0, x1, x2, x3 = R.gens[:4]
    return [x1**2 - x0 * x2, x1 * x2 - x0 * x3, x2**2 - x1 * x3]


def spolys_reduce_to_zero(G):
    order = G.order
    elems = list(G)
    for f, g in itertools.combinations(elems, 2):
        (ef, cf), (eg, cg) = f.lead(order), g.lead(order)
        lcm = tuple(max(a, b) for a, b in zip(ef, eg))
        mf = f.ring.monomial(tuple(a - b for a, b in zip(lcm, ef)))
        mg = g.ring.monomial(tuple(a - b for a, b in zip(lcm, eg)))
        s = mf * f * cg - mg * g * cf
        if not normal_form(s, G).is_zero():
            return False
    return True


def as_set(G):
    return {g.monic(G.order) for g in G}


def test_linear_basis(P3):
    x0, x1, *_ = P3.gens
    assert as_set(buchberger([x0 + x1, x1])) == {x0, x1}


def test_twisted_cubic_is_already_a_basis(P3):
    gens = twisted_cubic_gens(P3)
    G = buchberger(gens)
    assert len(G) == 3
    assert as_set(G) == {g.monic() for g in gens}
    assert spolys_reduce_to_zero(G)


def test_basis_gains_a_cubic(P3):
    x0, x1, *_ = P3.gens
    G = buchberger([x0**2, x0 * x1 + x1**2])
    assert as_set(G) == {x0**2, x0 * x1 + x1**2, x1**3}
    assert spolys_reduce_to_zero(G)


def test_normal_forms(P3):
    x0, x1, x2, x3 = P3.gens
    assert normal_form(x0**2, buchberger([x0 - x1], LEX)) == x1**2
    assert normal_form(x1**2 - x0 * x2, buchberger(twisted_cubic_gens(P3))).is_zero()
    assert normal_form(x0, buchberger([x1])) == x0


def test_membership(P3):
    x0, x1, x2, x3 = P3.gens
    TC = Ideal(P3, twisted_cubic_gens(P3))
    assert TC.contains(x0 * x3 - x1 * x2)
    assert not TC.contains(x0 * x3)
    assert Ideal(P3, [x0, x1]).contains(x0)
    assert not Ideal(P3, [x0, x1]).contains(x2)


def test_unit_and_zero(P3):
    x0, *_ = P3.gens
    assert buchberger([x0, x0 + 1]).is_unit
    assert buchberger([P3.zero()]).is_zero_ideal


def test_lex_basis_of_twisted_cubic_is_a_basis(P3):
    G = buchberger(twisted_cubic_gens(P3), LEX)
    assert spolys_reduce_to_zero(G)
    for g in twisted_cubic_gens(P3):
        assert G.contains(g)


def test_rendering_is_stable(P3):
    x0, x1, *_ = P3.gens
    G = buchberger([x0**2, x0 * x1 + x1**2])
    assert G.render() == buchberger([x0 * x1 + x1**2, x0**2]).render()
