import pytest

from curvereg.curves import (Budget, ConstructionError, TreeSpec, TreeStep,
                             curve_union, giaimo_curve, is_connected,
                             linear_curve, linear_subspace_ideal, plane_curve,
                             random_connected_curve, rational_normal_curve,
                             tree, twisted_config)
from curvereg.geometry import LinearSubspace, xi
from curvereg.ideals import Ideal, ideal_sum, saturate
from curvereg.invariants import dim_deg
from curvereg.polyring import Ring
from curvereg.resolution import betti_numbers, regularity

E = [[int(i == j) for j in range(5)] for i in range(5)]


def ideal(R, *texts):
    return Ideal(R, [R.parse(t) for t in texts])


@pytest.fixture
def P4():
    return Ring(5)


def test_coordinate_lines(P4):
    assert linear_curve(P4, E[0], E[1]).ideal == ideal(P4, "x2", "x3", "x4")
    assert linear_curve(P4, E[0], E[3]).ideal == ideal(P4, "x1", "x2", "x4")
    assert linear_subspace_ideal(P4, [P4.gens[2], P4.gens[3]]) == ideal(P4, "x2", "x3")
    with pytest.raises(ConstructionError):
        linear_curve(P4, E[0], E[0])
    with pytest.raises(ConstructionError):
        linear_curve(P4, E[0], [3, 0, 0, 0, 0])


def test_rational_normal_curves(P4):
    line = rational_normal_curve(P4, 1, [[1, 0], [0, 1], [0, 0], [0, 0], [0, 0]])
    assert line.ideal == ideal(P4, "x2", "x3", "x4")
    rows = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [0, 0, 0, 0]]
    cubic = rational_normal_curve(P4, 3, rows)
    assert cubic.ideal == ideal(P4, "x1^2 - x0*x2", "x1*x2 - x0*x3", "x2^2 - x1*x3", "x4")
    assert dim_deg(cubic.ideal) == (1, 3)
    conic = rational_normal_curve(P4, 2, [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1], [0, 0, 0]])
    assert (conic.degree, conic.span().dim) == (2, 2)


def test_rational_normal_curve_input_errors(P4):
    with pytest.raises(ConstructionError, match="entries"):
        rational_normal_curve(P4, 2, [[1, 0], [0, 1], [0, 0], [0, 0], [0, 0]])
    with pytest.raises(ConstructionError):
        rational_normal_curve(P4, 2, [[1, 0, 0], [2, 0, 0], [0, 0, 0], [0, 0, 0], [0, 0, 0]])


def test_parametrisation_lies_on_the_curve(P4):
    rows = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [1, 1, 1, 1]]
    C = rational_normal_curve(P4, 3, rows)
    for s, t in ((1, 0), (0, 1), (3, 7), (11, 2)):
        pt = C.components[0].point(s, t)
        assert all(g(*pt) == 0 for g in C.ideal.gens)


def test_plane_curves(P4):
    x = P4.gens
    L = LinearSubspace(P4, [x[3], x[4]])
    M = LinearSubspace(P4, [x[0], x[4]])
    assert plane_curve(P4, L, x[2]).ideal == ideal(P4, "x2", "x3", "x4")
    F = plane_curve(P4, M, x[2]**2 - x[1] * x[3])
    FL = saturate(ideal_sum(F.ideal, L.ideal()))
    assert FL == ideal(P4, "x0", "x3", "x4", "x2^2")
    assert dim_deg(FL) == (0, 2)
    fermat = x[0] + x[1] + x[2]
    E1 = plane_curve(P4, L, fermat)
    assert fermat(*E[1]) == 1 and fermat(*E[0]) == 1
    assert not E1.ideal.contains(x[2])


def test_plane_curve_form_in_plane_coordinates(P4):
    C = plane_curve(P4, [E[0], E[1], E[2]], "u0*u1 - u2^2")
    assert C.ideal == ideal(P4, "x3", "x4", "x0*x1 - x2^2")
    with pytest.raises(ConstructionError):
        plane_curve(P4, [E[0], E[1], E[2]], "u0^2 - u1")


def test_unions_of_lines():
    R = Ring(4)
    a = linear_curve(R, [1, 0, 0, 0], [0, 1, 0, 0])
    b = linear_curve(R, [1, 0, 0, 0], [0, 0, 1, 0])
    U = curve_union([a, b])
    assert U.ideal == ideal(R, "x3", "x1*x2")
    assert U.degree == 2 and is_connected(U)
    skew = curve_union([a, linear_curve(R, [0, 0, 1, 0], [0, 0, 0, 1])])
    assert skew.degree == 2 and not is_connected(skew)
    with pytest.raises(ConstructionError):
        curve_union([a, a])


def test_irreducible_curve_is_connected(P4):
    assert is_connected(linear_curve(P4, E[0], E[1]))


def test_trees():
    single = tree(TreeSpec((TreeStep(3),)))
    assert xi(single).xi == 2 and regularity(single.ideal) == 2
    line_conic = tree(TreeSpec((TreeStep(1), TreeStep(2, attach=(0, (1, 1))))))
    assert xi(line_conic).xi == 2 and regularity(line_conic.ideal) == 2
    assert line_conic.parts["tree"]


def test_tree_with_coplanar_spans_is_rejected():
    spec = TreeSpec((TreeStep(1), TreeStep(2, attach=(0, (1, 0)), directions=((0, 1, 0, 0), (1, 1, 1, 0)))),
                    ambient=3)
    with pytest.raises(ConstructionError, match="dimension 1"):
        tree(spec)


@pytest.mark.parametrize("m", [4, 5])
def test_giaimo_family(m):
    C = giaimo_curve(m)
    assert C.degree == m + 2
    assert C.span().dim == 4
    assert xi(C).xi == m
    assert regularity(C.ideal) == m
    assert betti_numbers(C.ideal).shifted()[(0, m)] >= 1
    assert is_connected(C)


def test_giaimo_needs_m_at_least_four():
    with pytest.raises(ConstructionError):
        giaimo_curve(3)


def test_giaimo_with_lines_in_place_of_the_plane_curve():
    C = giaimo_curve(5, variant="lines")
    assert (C.degree, xi(C).xi, regularity(C.ideal)) == (7, 5, 5)


def test_twisted_configuration():
    T = twisted_config()
    assert (T.union.degree, T.union.span().dim) == (5, 4)
    assert xi(T.union).xi == 3 and regularity(T.union.ideal) == 3


def test_random_curves_are_connected_and_reproducible():
    budget = Budget(max_components=3, max_degree=5, max_ambient=4)
    for seed in range(3):
        C = random_connected_curve(seed, budget)
        assert is_connected(C)
        assert random_connected_curve(seed, budget).ideal == C.ideal
        assert regularity(C.ideal) <= xi(C).xi


def test_random_curve_budget_validation():
    with pytest.raises(ValueError):
        random_connected_curve(0, Budget(max_degree=0))
