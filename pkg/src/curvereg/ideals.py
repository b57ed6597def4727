"""Homogeneous ideals and the ideal arithmetic built on Gröbner bases.

An :class:`Ideal` keeps its generators and lazily caches one reduced Gröbner
basis per monomial order.  Sums, intersections (by eliminating an auxiliary
variable), quotients, saturations and eliminations return new ideals.
"""

from __future__ import annotations

import random
from typing import Iterable, Sequence

from .groebner import ReducedGB, buchberger
from .polyring import GREVLEX, MonomialOrder, Polynomial, Ring, as_polys

# fixed seed for the random linear forms used by the fast saturation path
_SAT_SEED = 0x5A7


class Ideal:
    """An ideal of ``ring`` given by generators.

    ``saturated`` records that the ideal is known to be saturated with respect
    to the irrelevant ideal; it is a promise made by constructors, never
    guessed.
    """

    def __init__(self, ring: Ring, gens: Iterable = (), saturated: bool = False):
        self.ring = ring
        self.gens: tuple[Polynomial, ...] = tuple(g for g in as_polys(ring, gens) if g)
        self.saturated = saturated
        self._gb: dict[MonomialOrder, ReducedGB] = {}
        self._hilbert = None

    # -- basic queries ----------------------------------------------------
    def gb(self, order: MonomialOrder = GREVLEX) -> ReducedGB:
        G = self._gb.get(order)
        if G is None:
            G = buchberger(list(self.gens) or [self.ring.zero()], order)
            self._gb[order] = G
        return G

    @property
    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.gens)

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        if any(g.is_constant() for g in self.gens):
            return True
        return self.gb().is_unit

    def contains(self, f) -> bool:
        if isinstance(f, str):
            f = self.ring.parse(f)
        if not f:
            return True
        if self.is_zero():
            return False
        return self.gb().contains(f)

    __contains__ = contains

    def issubset(self, other: "Ideal") -> bool:
        _same_ring(self, other)
        return all(other.contains(g) for g in self.gens)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.ring == other.ring and self.gb().basis == other.gb().basis

    __hash__ = None

    def __repr__(self):
        shown = ", ".join(g.render() for g in self.gens[:6])
        more = ", ..." if len(self.gens) > 6 else ""
        return f"Ideal({shown}{more})"

    def render(self) -> str:
        return self.gb().render()

    def max_generator_degree(self) -> int:
        return max((g.degree() for g in self.gens), default=-1)

    def minimal_generators(self) -> list[Polynomial]:
        """A minimal homogeneous generating set (greedy by degree)."""
        if not self.is_homogeneous:
            raise ValueError("minimal generators are only defined for homogeneous ideals")
        kept: list[Polynomial] = []
        current = None
        for g in sorted(self.gens, key=lambda f: f.degree()):
            if current is not None and current.contains(g):
                continue
            kept.append(g)
            current = buchberger(kept)
        return kept

    def restrict_generators(self, degree: int) -> list[Polynomial]:
        """Reduced Gröbner basis elements of degree at most ``degree``."""
        return [g for g in self.gb().basis if g.degree() <= degree]


def _same_ring(I: Ideal, J: Ideal):
    if I.ring != J.ring:
        raise ValueError("ideals live in different rings")


def unit_ideal(ring: Ring) -> Ideal:
    return Ideal(ring, [ring.one()], saturated=True)


def zero_ideal(ring: Ring) -> Ideal:
    return Ideal(ring, [], saturated=True)


def irrelevant_ideal(ring: Ring) -> Ideal:
    return Ideal(ring, ring.gens)


def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    """``I + J``."""
    _same_ring(I, J)
    return Ideal(I.ring, I.gens + J.gens)


def ideal_intersect(I: Ideal, J: Ideal) -> Ideal:
    """``I ∩ J``: eliminate ``t`` from ``t*I + (1 - t)*J``."""
    _same_ring(I, J)
    ring = I.ring
    if I.is_zero() or J.is_zero():
        return zero_ideal(ring)
    if I.is_unit():
        return J
    if J.is_unit():
        return I
    big = Ring(ring.nvars + 1, ring.field, ("_t",) + ring.names)
    one = ring.field(1)
    gens = []
    for f in I.gens:
        gens.append(Polynomial(big, {(1,) + e: c for e, c in f.coeffs.items()}))
    norm = ring.field.normalizer()
    for g in J.gens:
        terms = {}
        for e, c in g.coeffs.items():
            terms[(0,) + e] = c
            terms[(1,) + e] = norm(-c * one)
        gens.append(Polynomial(big, terms))
    order = MonomialOrder("block", block=1)
    grading = (0,) + (1,) * ring.nvars
    G = buchberger(gens, order, grading)
    out = [Polynomial(ring, {e[1:]: c for e, c in g.coeffs.items()})
           for g in G.basis if all(e[0] == 0 for e in g.coeffs)]
    return Ideal(ring, out, saturated=I.saturated and J.saturated)


def _linear_coordinates(ring: Ring, h: Polynomial):
    """Coordinates ``y`` with ``y_k = h`` for a pivot ``k``.

    Returns ``(k, to_y, to_x)``: substitution images taking polynomials in
    ``x`` to polynomials in ``y`` and back.
    """
    if not h or h.degree() != 1 or not h.is_homogeneous():
        raise ValueError("expected a nonzero linear form")
    coeffs = [ring.field(0)] * ring.nvars
    for e, c in h.coeffs.items():
        coeffs[e.index(1)] = c
    k = max(i for i, c in enumerate(coeffs) if c)
    gens = ring.gens
    inv = ring.field.inv(coeffs[k])
    xk = gens[k] * inv
    for i, c in enumerate(coeffs):
        if i != k and c:
            xk = xk - gens[i] * (c * inv)
    to_y = [gens[i] if i != k else xk for i in range(ring.nvars)]
    to_x = [gens[i] if i != k else h for i in range(ring.nvars)]
    return k, to_y, to_x


def colon_linear(I: Ideal, h: Polynomial, times: int | None = 1) -> Ideal:
    """``I : h^times`` for a linear form ``h`` (``times=None`` means ``h^∞``).

    In coordinates where ``h`` is the last variable of a reverse
    lexicographic order, the reduced basis of a homogeneous ideal divided by
    powers of ``h`` is a basis of the quotient.
    """
    ring = I.ring
    if I.is_zero():
        return I
    if not I.is_homogeneous:
        raise ValueError("colon by a linear form needs a homogeneous ideal")
    k, to_y, to_x = _linear_coordinates(ring, h)
    trivial = len(h.coeffs) == 1
    gens = I.gens if trivial else [f.substitute(to_y) for f in I.gens]
    perm = [i for i in range(ring.nvars) if i != k] + [k]
    order = MonomialOrder("grevlex", perm=perm)
    G = I.gb(order) if trivial else buchberger(gens, order)
    out = []
    for g in G.basis:
        low = min(e[k] for e in g.coeffs)
        if times is not None:
            low = min(low, times)
        if low:
            g = Polynomial(ring, {e[:k] + (e[k] - low,) + e[k + 1:]: c for e, c in g.coeffs.items()})
        out.append(g if trivial else g.substitute(to_x))
    return Ideal(ring, out)


def ideal_quotient(I: Ideal, J: Ideal) -> Ideal:
    """``I : J``, intersecting the quotients by each generator of ``J``."""
    _same_ring(I, J)
    if J.is_zero():
        raise ValueError("quotient by the zero ideal")
    result = None
    for f in J.gens:
        if not f:
            continue  # I : 0 is the whole ring
        Q = _quotient_by_element(I, f)
        result = Q if result is None else ideal_intersect(result, Q)
        if result.is_unit():
            break
    return result


def _quotient_by_element(I: Ideal, f: Polynomial) -> Ideal:
    ring = I.ring
    if f.is_constant():
        return I
    if I.is_unit():
        return I
    if f.degree() == 1 and f.is_homogeneous() and I.is_homogeneous:
        return colon_linear(I, f, 1)
    K = ideal_intersect(I, Ideal(ring, [f]))
    return Ideal(ring, [g.divide_exact(f) for g in K.gens])


def saturate(I: Ideal, J: Ideal | None = None) -> Ideal:
    """``I : J^∞`` (``J`` defaults to the irrelevant ideal).

    For the irrelevant ideal a random linear form ``h`` is tried first:
    ``I : h^∞`` always contains the saturation and equals it exactly when
    the two quotients have the same Hilbert polynomial, which is checked.
    Otherwise, and for other ``J``, quotients are iterated until stable.
    """
    ring = I.ring
    if J is not None:
        _same_ring(I, J)
    if I.is_zero() or I.is_unit():
        return I
    if J is None:
        if I.saturated:
            return I
        if I.is_homogeneous:
            from .invariants import hilbert_polynomial
            target = hilbert_polynomial(I)
            rng = random.Random(_SAT_SEED)
            for _ in range(3):
                h = ring.linear_form([ring.field.random_element(rng) for _ in range(ring.nvars)])
                S = colon_linear(I, h, None)
                if S.is_unit() or hilbert_polynomial(S) == target:
                    S.saturated = True
                    return S
        J = irrelevant_ideal(ring)
        by_irrelevant = True
    else:
        by_irrelevant = False
    current = I
    while True:
        nxt = ideal_quotient(current, J)
        if nxt.issubset(current):
            break
        current = nxt
    if by_irrelevant:
        current.saturated = True
    return current


def eliminate(I: Ideal, variables: Sequence[int]) -> Ideal:
    """``I ∩ K[remaining variables]``, via a block order with ``variables`` first."""
    ring = I.ring
    variables = sorted(set(variables))
    if any(not 0 <= v < ring.nvars for v in variables):
        raise ValueError("variable index out of range")
    if not variables:
        return Ideal(ring, I.gb().basis, saturated=I.saturated)
    if len(variables) == ring.nvars:
        return unit_ideal(ring) if I.is_unit() else zero_ideal(ring)
    rest = [i for i in range(ring.nvars) if i not in variables]
    order = MonomialOrder("block", block=len(variables), perm=list(variables) + rest)
    G = I.gb(order)
    drop = set(variables)
    return Ideal(ring, [g for g in G.basis if not (g.variables() & drop)])


__all__ = [
    "Ideal", "colon_linear", "eliminate", "ideal_intersect", "ideal_quotient",
    "ideal_sum", "irrelevant_ideal", "saturate", "unit_ideal", "zero_ideal",
]
