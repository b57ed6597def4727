"""Linear subspaces, spans, the bound Ξ, secant degrees and extremal secants."""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from typing import Sequence

from .ideals import Ideal, ideal_sum, saturate
from .invariants import dim_deg
from .linalg import nullspace, rank, rref
from .polyring import Polynomial, Ring


class LinearSubspace:
    """A projective linear subspace, stored as reduced row-echelon linear forms.

    ``dim`` is the projective dimension: ``n - rank``.  A subspace cut out by
    ``n + 1`` independent forms is empty (``dim == -1``).
    """

    def __init__(self, ring: Ring, forms: Sequence = ()):
        self.ring = ring
        field = ring.field
        rows = []
        for f in forms:
            if isinstance(f, str):
                f = ring.parse(f)
            if isinstance(f, Polynomial):
                if f.ring != ring:
                    raise ValueError("linear form from a different ring")
                if f and (f.degree() != 1 or not f.is_homogeneous()):
                    raise ValueError(f"{f.render()} is not a linear form")
                row = [field(0)] * ring.nvars
                for e, c in f.coeffs.items():
                    row[e.index(1)] = c
            else:
                row = [field(c) for c in f]
                if len(row) != ring.nvars:
                    raise ValueError("coefficient row has the wrong length")
            rows.append(row)
        red, _ = rref(rows, field) if rows else ([], [])
        self.rows: tuple[tuple, ...] = tuple(tuple(r) for r in red)

    @classmethod
    def from_points(cls, ring: Ring, points: Sequence[Sequence]) -> "LinearSubspace":
        """Span of the given points (vectors of length ``n + 1``)."""
        field = ring.field
        pts = [[field(c) for c in p] for p in points]
        for p in pts:
            if len(p) != ring.nvars:
                raise ValueError("point has the wrong number of coordinates")
        forms = nullspace(pts, ring.nvars, field) if pts else [
            [field(int(i == j)) for j in range(ring.nvars)] for i in range(ring.nvars)]
        return cls(ring, forms)

    @property
    def dim(self) -> int:
        return self.ring.nvars - 1 - len(self.rows)

    @property
    def codim(self) -> int:
        return len(self.rows)

    def forms(self) -> list[Polynomial]:
        return [self.ring.linear_form(r) for r in self.rows]

    def ideal(self) -> Ideal:
        return Ideal(self.ring, self.forms(), saturated=True)

    def points(self) -> list[list]:
        """A basis of the underlying vector space (``dim + 1`` vectors)."""
        return nullspace([list(r) for r in self.rows], self.ring.nvars, self.ring.field)

    def contains_point(self, p: Sequence) -> bool:
        field = self.ring.field
        return all(field(sum(a * field(b) for a, b in zip(r, p))) == 0 for r in self.rows)

    def contains(self, other: "LinearSubspace") -> bool:
        return all(self.contains_point(p) for p in other.points())

    def __eq__(self, other):
        return isinstance(other, LinearSubspace) and self.ring == other.ring and self.rows == other.rows

    __hash__ = None

    def __repr__(self):
        return f"LinearSubspace(dim={self.dim}, forms=[{', '.join(f.render() for f in self.forms())}])"


def subspace_meet(A: LinearSubspace, B: LinearSubspace) -> LinearSubspace:
    """Intersection: the union of the defining forms."""
    if A.ring != B.ring:
        raise ValueError("subspaces of different ambient spaces")
    return LinearSubspace(A.ring, [list(r) for r in A.rows + B.rows])


def subspace_join(A: LinearSubspace, B: LinearSubspace) -> LinearSubspace:
    """Smallest subspace containing both."""
    if A.ring != B.ring:
        raise ValueError("subspaces of different ambient spaces")
    return LinearSubspace.from_points(A.ring, A.points() + B.points())


def _ideal_of(X) -> Ideal:
    return X if isinstance(X, Ideal) else X.ideal


def span(X) -> LinearSubspace:
    """Smallest linear subspace containing ``V(I)``: the linear forms of ``I^sat``."""
    I = _ideal_of(X)
    if I.is_zero():
        return LinearSubspace(I.ring, [])
    S = saturate(I)
    if S.is_unit():
        return LinearSubspace(I.ring, [[int(i == j) for j in range(I.ring.nvars)] for i in range(I.ring.nvars)])
    return LinearSubspace(I.ring, [g for g in S.gb().basis if g.degree() == 1])


@dataclass(frozen=True)
class XiValue:
    """``Ξ = degree - span_dim + 2``."""

    degree: int
    span_dim: int

    @property
    def xi(self) -> int:
        return self.degree - self.span_dim + 2

    def __int__(self):
        return self.xi


def xi(C) -> XiValue:
    """Ξ of a curve (or of the curve cut out by an ideal)."""
    I = _ideal_of(C)
    dim, deg = dim_deg(I)
    if dim != 1:
        raise ValueError(f"expected a curve, got a scheme of dimension {dim}")
    return XiValue(deg, span(I).dim)


def restrict(X, L: LinearSubspace) -> Ideal:
    """The ideal of ``V(I) ∩ L`` in coordinates on ``L`` (a ring with ``dim L + 1`` variables)."""
    I = _ideal_of(X)
    if L.dim < 0:
        raise ValueError("cannot restrict to the empty subspace")
    ring = I.ring
    pts = L.points()
    small = Ring(len(pts), ring.field, [f"u{j}" for j in range(len(pts))])
    u = small.gens
    images = []
    for i in range(ring.nvars):
        img = small.zero()
        for j, p in enumerate(pts):
            if p[i]:
                img = img + u[j] * p[i]
        images.append(img)
    gens = [g.substitute(images) for g in I.gens]
    return Ideal(small, gens)


def section(X, L: LinearSubspace) -> Ideal:
    """Saturated ideal of ``V(I) ∩ L`` in coordinates on ``L``."""
    return saturate(restrict(X, L))


def _component_inside(C, L: LinearSubspace) -> str | None:
    comps = getattr(C, "components", None)
    if not comps:
        return None
    forms = L.forms()
    for comp in comps:
        if all(comp.ideal.contains(f) for f in forms):
            return comp.name
    return None


def secant_degree(C, L: LinearSubspace) -> int:
    """``deg(C ∩ L)``; raises if ``L`` contains a component or the intersection is infinite."""
    inside = _component_inside(C, L)
    if inside is not None:
        raise ValueError(f"the subspace contains the component {inside}")
    S = section(C, L)
    if S.is_unit():
        return 0
    dim, deg = dim_deg(S)
    if dim > 0:
        raise ValueError("the intersection is not finite")
    return deg


@dataclass(frozen=True)
class SecantReport:
    degree: int | None
    regularity: int | None
    xi: int
    extremal: bool
    note: str = ""


def secant_report(C, L: LinearSubspace, xi_value: int | None = None) -> SecantReport:
    """Degree, regularity and extremality of ``C ∩ L``; infinite intersections are reported, not raised."""
    X = xi_value if xi_value is not None else xi(C).xi
    inside = _component_inside(C, L)
    if inside is not None:
        return SecantReport(None, None, X, False, f"contains component {inside}")
    S = section(C, L)
    if S.is_unit():
        return SecantReport(0, None, X, False, "empty intersection")
    dim, deg = dim_deg(S)
    if dim > 0:
        return SecantReport(None, None, X, False, "infinite intersection")
    if L.dim == 1:
        reg = deg  # a finite scheme on a line has regularity equal to its degree
    else:
        from .resolution import regularity
        reg = regularity(S)
    return SecantReport(deg, reg, X, reg == X)


def is_extremal_secant(C, L: LinearSubspace, xi_value: int | None = None) -> bool:
    """``C ∩ L`` finite with ``reg(C ∩ L) = Ξ(C)``."""
    return secant_report(C, L, xi_value).extremal


def random_subspace(ring: Ring, dim: int, rng: random.Random, inside: LinearSubspace | None = None) -> LinearSubspace:
    """Seeded random subspace of the given dimension (optionally inside another)."""
    field = ring.field
    if inside is None:
        basis = [[int(i == j) for j in range(ring.nvars)] for i in range(ring.nvars)]
    else:
        basis = inside.points()
    if dim + 1 > len(basis):
        raise ValueError("subspace dimension too large")
    while True:
        pts = []
        for _ in range(dim + 1):
            coeffs = [field.random_element(rng, nonzero=False) for _ in basis]
            pts.append([field(sum(c * b[i] for c, b in zip(coeffs, basis))) for i in range(ring.nvars)])
        if rank(pts, field) == dim + 1:
            return LinearSubspace.from_points(ring, pts)


@dataclass
class LinearSectionReport:
    """Outcome of the linear-section bound and the hyperplane nondegeneracy checks."""

    degree: int | None
    bound: int
    holds: bool
    hyperplanes: list = dc_field(default_factory=list)  # (seed index, nondegenerate?)
    note: str = ""

    @property
    def ok(self) -> bool:
        return self.holds and all(ok for _, ok in self.hyperplanes)


def check_linear_section_bound(C, L: LinearSubspace, seed: int = 0, hyperplanes: int = 3) -> LinearSectionReport:
    """``deg(C ∩ L) <= deg(C) - n + 1 + dim(L)`` for ``C`` nondegenerate in ``P^n``.

    Also checks on seeded random hyperplanes ``H`` that the section ``C ∩ H``
    is nondegenerate in ``H``: the only linear form in ``(I_C + I_H)^sat`` is
    the equation of ``H``.
    """
    I = _ideal_of(C)
    ring = I.ring
    n = ring.nvars - 1
    if span(I).dim != n:
        raise ValueError("the curve is degenerate; re-embed it in its span first")
    _, deg_c = dim_deg(I)
    bound = deg_c - n + 1 + L.dim
    try:
        d = secant_degree(C, L)
        holds = d <= bound
        note = ""
    except ValueError as exc:
        d, holds, note = None, False, str(exc)
    rng = random.Random(seed)
    checks = []
    for k in range(hyperplanes):
        H = random_subspace(ring, n - 1, rng)
        S = saturate(ideal_sum(I, H.ideal()))
        lin = LinearSubspace(ring, [g for g in S.gb().basis if g.degree() == 1])
        checks.append((k, lin == H))
    return LinearSectionReport(d, bound, holds, checks, note)


__all__ = [
    "LinearSectionReport", "LinearSubspace", "SecantReport", "XiValue", "check_linear_section_bound",
    "is_extremal_secant", "random_subspace", "restrict", "secant_degree", "secant_report", "section",
    "span", "subspace_join", "subspace_meet", "xi",
]
