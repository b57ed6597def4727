import json

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from curvereg.curves import Budget, curve_union, linear_curve, random_connected_curve
from curvereg.geometry import xi
from curvereg.groebner import buchberger
from curvereg.ideals import (Ideal, ideal_intersect, ideal_quotient, ideal_sum,
                             saturate)
from curvereg.invariants import hilbert_series, monomial_numerator, saturation_degree
from curvereg.polyring import QQ, Field, MonomialOrder, Polynomial, Ring, mono_cmp
from curvereg.resolution import betti_numbers, regularity
from curvereg.verify import (CheckReport, random_tree, random_unsaturated_ideal,
                             recompute_verdict, run_suite)

SLOW = settings(max_examples=25, deadline=None, suppress_health_check=[HealthCheck.too_slow])
FAST = settings(max_examples=80, deadline=None)

R3 = Ring(3)
ORDERS = [MonomialOrder("grevlex"), MonomialOrder("lex"), MonomialOrder("block", block=1)]

exponents = st.tuples(*[st.integers(0, 3)] * 3)


def terms_of_degree(d):
    mons = R3.monomials_of_degree(d)
    return st.dictionaries(st.sampled_from(mons), st.integers(-5, 5), min_size=1, max_size=4)


@st.composite
def homogeneous(draw, ring=R3, low=1, high=3):
    d = draw(st.integers(low, high))
    terms = draw(terms_of_degree(d))
    f = Polynomial(ring, terms)
    return f if f else ring.gens[0] ** d


ideals = st.lists(homogeneous(), min_size=1, max_size=3).map(lambda gs: Ideal(R3, gs))


@FAST
@given(st.sampled_from(ORDERS), exponents, exponents, exponents)
def test_orders_are_multiplicative(order, a, b, c):
    ac = tuple(x + z for x, z in zip(a, c))
    bc = tuple(y + z for y, z in zip(b, c))
    assert mono_cmp(order, a, b) == mono_cmp(order, ac, bc)


@FAST
@given(homogeneous(), homogeneous())
def test_products_of_forms_are_forms(f, g):
    h = f * g
    assert h.is_zero() or (h.is_homogeneous() and h.degree() == f.degree() + g.degree())


@SLOW
@given(st.lists(st.dictionaries(st.sampled_from(R3.monomials_of_degree(2)), st.integers(-3, 3),
                                min_size=1, max_size=3), min_size=1, max_size=3))
def test_prime_field_agrees_with_rationals_on_small_data(gens):
    RQ = Ring(3, QQ)
    IQ = Ideal(RQ, [Polynomial(RQ, t) for t in gens])
    IP = Ideal(R3, [Polynomial(R3, t) for t in gens])
    if IQ.is_zero():
        return
    assert hilbert_series(IQ).numerator == hilbert_series(IP).numerator


@SLOW
@given(ideals)
def test_groebner_basis_is_idempotent_and_contains_generators(I):
    G = I.gb()
    again = buchberger(list(G) or [R3.zero()])
    assert G.render() == again.render()
    assert all(G.contains(g) for g in I.gens)


@SLOW
@given(ideals)
def test_betti_numerator_equals_hilbert_numerator(I):
    if I.is_unit():
        return
    assert betti_numbers(I).numerator() == list(hilbert_series(I).numerator)


@SLOW
@given(ideals, ideals)
def test_intersection_inside_both(I, J):
    K = ideal_intersect(I, J)
    assert K.issubset(I) and K.issubset(J)


@SLOW
@given(ideals, ideals)
def test_ideal_inside_its_quotient(I, J):
    assert I.issubset(ideal_quotient(I, J))


@SLOW
@given(ideals)
def test_saturation_is_idempotent(I):
    S = saturate(I)
    assert saturate(Ideal(R3, S.gens)) == S


@SLOW
@given(ideals, ideals)
def test_saturation_degree_of_intersection(I, J):
    # (I ∩ J)^sat = I^sat ∩ J^sat agrees with I ∩ J from max(sat I, sat J) on
    K = ideal_intersect(I, J)
    if K.is_zero():
        return
    assert saturation_degree(K) <= max(saturation_degree(I), saturation_degree(J))


@SLOW
@given(ideals)
def test_hilbert_series_does_not_depend_on_the_order(I):
    lex = I.gb(MonomialOrder("lex")).lead_exponents()
    if I.is_zero():
        return
    assert tuple(monomial_numerator(lex)) == hilbert_series(I).numerator


@settings(max_examples=10, deadline=None)
@given(st.integers(0, 10_000))
def test_trees_have_xi_two(seed):
    T = random_tree(seed, max_components=3, max_ambient=6)
    assert xi(T).xi == 2
    assert regularity(T.ideal) <= 2


@settings(max_examples=8, deadline=None)
@given(st.integers(0, 10_000))
def test_xi_is_at_least_two_and_bounds_regularity(seed):
    C = random_connected_curve(seed, Budget(max_components=3, max_degree=5, max_ambient=4))
    X = xi(C).xi
    assert X >= 2
    assert regularity(C.ideal) <= X


@FAST
@given(st.integers(1, 100), st.integers(1, 100))
def test_degree_is_additive_over_disjoint_lines(a, b):
    R = Ring(4)
    l1 = linear_curve(R, [1, 0, 0, 0], [0, 1, 0, 0])
    l2 = linear_curve(R, [0, 0, 1, 0], [a, b, 0, 1])
    from curvereg.invariants import dim_deg
    assert dim_deg(curve_union([l1, l2]).ideal)[1] == 2


@settings(max_examples=6, deadline=None)
@given(st.integers(0, 10_000))
def test_saturation_regularity_identity(seed):
    from curvereg.resolution import regularity_crosscheck
    I = random_unsaturated_ideal(seed)
    assert regularity(I) == regularity_crosscheck(I)


@FAST
@given(st.lists(st.tuples(st.integers(-3, 3), st.sampled_from(["<=", "<", "==", ">=", "!="]),
                          st.integers(-3, 3)), max_size=6))
def test_reports_certify_themselves(claims):
    rep = CheckReport("prop", {})
    for lhs, op, rhs in claims:
        rep.claim("c", lhs, op, rhs)
    data = json.loads(rep.to_jsonl())
    assert recompute_verdict(data) == data["verdict"] == rep.verdict


@settings(max_examples=4, deadline=None)
@given(st.integers(0, 1000))
def test_suites_are_reproducible(seed):
    a = [r.to_jsonl() for r in run_suite("caviglia", seed=seed, count=1)]
    assert a == [r.to_jsonl() for r in run_suite("caviglia", seed=seed, count=1)]
