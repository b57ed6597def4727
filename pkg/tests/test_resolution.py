import itertools

import pytest

from curvereg.ideals import Ideal, irrelevant_ideal
from curvereg.invariants import hilbert_series
from curvereg.polyring import Ring
from curvereg.resolution import (BettiTable, betti_numbers, betti_table,
                                 find_extremal_line_planar,
                                 hilbert_burch_degrees, min_free_resolution,
                                 regularity, regularity_crosscheck,
                                 regularity_of_quotient)
from curvereg.verify import point_ideal, scheme_union


def ideal(R, *texts):
    return Ideal(R, [R.parse(t) for t in texts])


@pytest.fixture
def P3():
    return Ring(4)


@pytest.fixture
def P2():
    return Ring(3)


def twisted_cubic(R):
    return ideal(R, "x1^2 - x0*x2", "x1*x2 - x0*x3", "x2^2 - x1*x3")


def points(R, pts):
    return scheme_union(R, [point_ideal(R, p) for p in pts])


def test_koszul_on_two_linear_forms(P3):
    R = min_free_resolution(ideal(P3, "x2", "x3"))
    assert R.degrees == [[0], [1, 1], [2]]
    B = betti_table(R)
    assert (B[(1, 1)], B[(2, 2)]) == (2, 1)
    assert R.is_complex() and R.is_minimal()


def test_twisted_cubic_table(P3):
    B = betti_numbers(twisted_cubic(P3))
    assert B == BettiTable({(0, 0): 1, (1, 2): 3, (2, 3): 2})
    assert regularity(twisted_cubic(P3)) == 2
    assert regularity_of_quotient(twisted_cubic(P3)) == 1
    assert B.shifted() == BettiTable({(0, 2): 3, (1, 3): 2})


def test_complete_intersection_of_conics(P2):
    I = ideal(P2, "x0^2 - x1*x2", "x1^2 - x0*x2 + x2^2")
    assert min_free_resolution(I).degrees == [[0], [2, 2], [4]]


def test_ideal_module_resolution_drops_the_free_summand(P3):
    R = min_free_resolution(twisted_cubic(P3), of="ideal")
    assert R.degrees == [[2, 2, 2], [3, 3]]


def test_rendering_of_grid(P3):
    assert betti_numbers(twisted_cubic(P3)).render() == "       0 1 2\ntotal: 1 3 2\n    0: 1 . .\n    1: . 3 2"


def test_betti_numerator_matches_hilbert_numerator(P3):
    I = ideal(P3, "x0^3", "x0*x1*x2", "x2^2*x3 - x1^3", "x3^3")
    assert betti_numbers(I).numerator() == list(hilbert_series(I).numerator)


def test_resolution_of_powers_of_maximal_ideal(P2):
    m = irrelevant_ideal(P2)
    m2 = Ideal(P2, [a * b for a, b in itertools.combinations_with_replacement(m.gens, 2)])
    B = betti_numbers(m2)
    assert B.totals() == [1, 6, 8, 3]
    assert regularity(m2) == 2


def test_regularity_examples(P3):
    assert regularity(ideal(P3, "x2", "x3")) == 1
    R2 = Ring(2)
    J = ideal(R2, "x0^2", "x0*x1")
    assert regularity(J) == regularity_crosscheck(J) == 2
    m2 = ideal(R2, "x0^2", "x0*x1", "x1^2")
    assert regularity(m2) == regularity_crosscheck(m2) == 2
    assert regularity_crosscheck(twisted_cubic(P3)) == 2


def test_regularity_rejects_degenerate_ideals(P3):
    with pytest.raises(ValueError):
        regularity(Ideal(P3, [P3.one()]))
    with pytest.raises(ValueError):
        regularity(Ideal(P3, [P3.zero()]))


def test_diagonal_degrees_collinear(P2):
    X = points(P2, [(1, 0, 0), (0, 1, 0), (1, 1, 0)])
    D = hilbert_burch_degrees(betti_numbers(X))
    assert (D.a, D.b, D.e, D.f) == ((3, 1), (4,), (1,), (3,))
    assert D.finite_degree == 3 and D.ok


def test_diagonal_degrees_general_four(P2):
    X = points(P2, [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)])
    D = hilbert_burch_degrees(betti_numbers(X))
    assert (D.e, D.f, D.finite_degree, D.regularity) == ((2,), (2,), 4, 3)


def test_diagonal_degrees_single_point(P2):
    D = hilbert_burch_degrees(betti_numbers(point_ideal(P2, (1, 2, 3))))
    assert (D.a, D.b, D.e, D.f, D.finite_degree) == ((1, 1), (2,), (1,), (1,), 1)


def test_extremal_line_on_collinear_points(P2):
    X = points(P2, [(1, 0, 0), (0, 1, 0), (1, 1, 0)])
    line = find_extremal_line_planar(X)
    assert line is not None and line.monic() == P2.gens[2]


def test_no_extremal_line_for_general_four(P2):
    X = points(P2, [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)])
    assert regularity(X) == 3
    assert find_extremal_line_planar(X) is None


def test_extremal_line_with_four_collinear(P2):
    X = points(P2, [(1, 0, 0), (0, 1, 0), (1, 1, 0), (1, 2, 0), (0, 0, 1)])
    assert regularity(X) == 4
    line = find_extremal_line_planar(X)
    assert line is not None and line.monic() == P2.gens[2]
