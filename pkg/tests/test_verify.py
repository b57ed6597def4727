import json

import pytest

from curvereg.curves import (TreeSpec, TreeStep, curve_union, giaimo_curve,
                             linear_curve, plane_curve, tree, twisted_config)
from curvereg.geometry import LinearSubspace
from curvereg.ideals import Ideal
from curvereg.polyring import Ring
from curvereg.verify import (FAIL, INAPPLICABLE, PASS, CheckReport, Claim,
                             check_caviglia, check_construction,
                             check_curve_plus_points, check_finite_in_plane,
                             check_hilbert_burch, check_intadd,
                             check_main_theorem, check_mincur,
                             check_p3_theorem, check_saturation_regularity,
                             check_structure_props, check_xi_sum, double_point,
                             p3_examples, point_ideal, random_planar_scheme,
                             random_unsaturated_ideal, recompute_verdict,
                             run_suite, scheme_union)


@pytest.fixture(scope="module")
def config():
    return twisted_config()


@pytest.mark.parametrize("op, lhs, rhs, holds", [
    ("<=", 2, 3, True), ("<", 3, 3, False), ("==", 4, 4, True), (">=", 1, 2, False),
    ("!=", 1, 2, True), ("implies", False, False, True), ("implies", True, False, False),
    ("iff", True, True, True), ("iff", True, False, False),
])
def test_claim_operators(op, lhs, rhs, holds):
    assert Claim("c", lhs, op, rhs).holds == holds


def test_report_verdicts_and_round_trip():
    rep = CheckReport("demo", {"x": 1})
    assert rep.verdict == PASS
    rep.claim("one", 1, "<=", 2)
    rep.claim("two", 3, "<=", 2)
    assert rep.verdict == FAIL and [c.what for c in rep.failed] == ["two"]
    back = CheckReport.from_json(json.loads(rep.to_jsonl()))
    assert back.verdict == FAIL
    assert recompute_verdict(json.loads(rep.to_jsonl())) == FAIL
    assert CheckReport("demo", {}).skip("no").verdict == INAPPLICABLE


def test_runtime_is_kept_out_of_serialised_reports(config):
    rep = check_main_theorem(config.union)
    assert rep.runtime is not None and rep.runtime >= 0
    assert "runtime" not in rep.to_json()
    assert "runtime" in rep.to_json(include_runtime=True)


def test_main_theorem_on_maximal_curve():
    rep = check_main_theorem(giaimo_curve(5))
    assert rep.verdict == PASS
    assert rep.quantities["reg"] == rep.quantities["xi"] == 5
    # a degree-(xi+i) syzygy sits in the resolution of the ideal
    assert rep.quantities["syzygies_at_xi_plus_i"]["ideal"][0] >= 1


def test_main_theorem_on_tree():
    rep = check_main_theorem(tree(TreeSpec((TreeStep(2), TreeStep(1, attach=(0, (1, 1)))))))
    assert rep.verdict == PASS
    assert (rep.quantities["reg"], rep.quantities["xi"]) == (2, 2)


def test_caviglia(config):
    assert check_caviglia(config.C.ideal, config.D.ideal).verdict == PASS
    R = Ring(4)
    x0 = R.gens[0]
    assert check_caviglia(Ideal(R, [x0]), Ideal(R, [x0])).verdict == INAPPLICABLE


def test_intadd():
    R = Ring(3)
    p, q, r = [1, 0, 0], [0, 1, 0], [0, 0, 1]
    rep = check_intadd(point_ideal(R, p), point_ideal(R, q))
    assert rep.verdict == PASS and rep.quantities["deg_union"] == 2
    X = scheme_union(R, [point_ideal(R, p), point_ideal(R, q)])
    Y = scheme_union(R, [point_ideal(R, q), point_ideal(R, r)])
    rep = check_intadd(X, Y)
    assert rep.verdict == PASS and rep.quantities["deg_union"] == 3


def test_xi_sum_on_the_configuration(config):
    rep = check_xi_sum(config.C, config.D)
    assert rep.verdict == PASS
    q = rep.quantities
    assert (q["xi_C"], q["xi_D"], q["span_meet_dim"], q["xi_union"]) == (2, 2, 1, 3)


def test_xi_sum_on_giaimo_split():
    g = giaimo_curve(4)
    rep = check_xi_sum(g.parts["F"], curve_union([g.parts["G"], g.parts["E"], g.parts["K"]]))
    assert rep.verdict == PASS and rep.quantities["xi_union"] == 4


def test_mincur():
    R = Ring(5)
    line = linear_curve(R, [1, 0, 0, 0, 0], [0, 1, 0, 0, 0])
    rep = check_mincur(line)
    assert rep.verdict == PASS and (rep.quantities["reg"], rep.quantities["xi"]) == (1, 2)
    rep = check_mincur(giaimo_curve(4))
    assert rep.verdict == PASS and rep.quantities["reg"] == 4
    assert check_mincur(tree(TreeSpec((TreeStep(3),)))).verdict == PASS


def test_construction_m4():
    rep = check_construction(4, seed=0, random_lines=10, family_lines=2, hyperplanes=1)
    assert rep.verdict == PASS, rep.summary()
    q = rep.quantities
    assert (q["degree"], q["reg"], q["xi"]) == (6, 4, 4)


def test_structure_props_on_the_configuration(config):
    rep = check_structure_props(config.C, config.D)
    assert rep.verdict == PASS
    assert rep.quantities["span_meet_dim"] == 1
    assert rep.quantities["maximal_union"]


def test_p3_examples():
    two_conics, quartic_conic, cubic_conic = p3_examples()
    rep = check_p3_theorem(two_conics)
    assert rep.verdict == PASS and rep.quantities["xi"] == 3
    rep = check_p3_theorem(quartic_conic)
    assert rep.verdict == PASS and rep.quantities["extremal_line"] is not None
    rep = check_p3_theorem(cubic_conic)
    assert rep.verdict == PASS and not rep.quantities["maximal"]


def test_p3_rejects_lines():
    R = Ring(4)
    line = linear_curve(R, [1, 0, 0, 0], [0, 1, 0, 0])
    conic = plane_curve(R, LinearSubspace(R, [R.gens[3]]), R.parse("x0*x1 - x2^2"))
    assert check_p3_theorem(curve_union([line, conic])).verdict == INAPPLICABLE


@pytest.mark.parametrize("kind", ["collinear", "collinear_plus_one", "four_general", "random", "with_double"])
def test_finite_in_plane_families(kind):
    for seed in range(3):
        _, X = random_planar_scheme(seed, kind)
        assert check_finite_in_plane(X).verdict == PASS


def test_four_general_points_exception():
    R = Ring(3)
    X = scheme_union(R, [point_ideal(R, p) for p in ([1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1])])
    rep = check_finite_in_plane(X)
    assert rep.verdict == PASS
    assert (rep.quantities["degree"], rep.quantities["reg"], rep.quantities["line"]) == (4, 3, None)


def test_hilbert_burch_on_planar_schemes():
    for seed in range(5):
        _, X = random_planar_scheme(seed)
        rep = check_hilbert_burch(X)
        assert rep.verdict in (PASS, INAPPLICABLE), rep.summary()


def test_curve_plus_points():
    R = Ring(3)
    x0, x1, x2 = R.gens
    D = Ideal(R, [x0 * x1 - x2**2])
    Y = scheme_union(R, [point_ideal(R, [1, 0, 0]), point_ideal(R, [1, 2, 3]), point_ideal(R, [2, 1, 7])])
    rep = check_curve_plus_points(D, Y)
    assert rep.verdict == PASS
    from curvereg.ideals import ideal_intersect
    assert check_hilbert_burch(ideal_intersect(D, Y), d_curve=2).verdict == PASS


def test_double_point_has_length_two():
    from curvereg.invariants import dim_deg
    R = Ring(3)
    assert dim_deg(double_point(R, [1, 0, 0], [0, 1, 0])) == (0, 2)


def test_saturation_regularity():
    for seed in range(4):
        assert check_saturation_regularity(random_unsaturated_ideal(seed)).verdict == PASS


def test_suites_are_deterministic():
    a = [r.to_jsonl() for r in run_suite("intadd", seed=3, count=3)]
    b = [r.to_jsonl() for r in run_suite("intadd", seed=3, count=3)]
    assert a == b
    with pytest.raises(ValueError):
        run_suite("nope")
