"""Curve constructors: lines, rational normal curves, plane curves, unions and trees.

Also the fixed-coordinate configurations used in the checks: the family of
maximal-regularity curves in ``P^4`` without extremal secant lines, the
conic-plus-twisted-cubic configuration, and seeded random connected curves.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from typing import Sequence

import networkx as nx

from .geometry import LinearSubspace, span, subspace_meet
from .ideals import Ideal, ideal_intersect, ideal_sum, saturate
from .invariants import dim_deg
from .linalg import left_inverse, nullspace, rank
from .polyring import GF32003, Field, Polynomial, Ring


class ConstructionError(ValueError):
    """A construction's side conditions do not hold."""


@dataclass
class Component:
    """An irreducible (or explicitly tagged reducible) piece of a curve."""

    name: str
    kind: str
    ideal: Ideal
    degree: int
    span_dim: int
    rows: list | None = None  # parametrization coefficient rows of a rational curve

    def point(self, s, t) -> list:
        """Image of ``(s:t)`` under the parametrization (rational components only)."""
        if self.rows is None:
            raise ValueError(f"component {self.name} has no parametrization")
        field = self.ideal.ring.field
        d = len(self.rows[0]) - 1
        mons = [field(s) ** (d - j) * field(t) ** j for j in range(d + 1)]
        return [field(sum(r[j] * mons[j] for j in range(d + 1))) for r in self.rows]


@dataclass
class Curve:
    """A reduced curve: saturated ideal plus its components and named parts."""

    ideal: Ideal
    components: list[Component]
    parts: dict = dc_field(default_factory=dict)
    _graph: nx.Graph | None = None

    @property
    def ring(self) -> Ring:
        return self.ideal.ring

    @property
    def degree(self) -> int:
        return dim_deg(self.ideal)[1]

    def span(self) -> LinearSubspace:
        return span(self.ideal)

    @property
    def incidence_graph(self) -> nx.Graph:
        if self._graph is None:
            G = nx.Graph()
            G.add_nodes_from(range(len(self.components)))
            for i in range(len(self.components)):
                for j in range(i + 1, len(self.components)):
                    if _meet(self.components[i].ideal, self.components[j].ideal) >= 0:
                        G.add_edge(i, j)
            self._graph = G
        return self._graph

    def component(self, name: str) -> Component:
        for c in self.components:
            if c.name == name:
                return c
        raise KeyError(name)

    def __repr__(self):
        return f"Curve(degree={self.degree}, components={[c.name for c in self.components]})"


def _meet(I: Ideal, J: Ideal) -> int:
    """Projective dimension of ``V(I) ∩ V(J)`` (``-1`` when empty)."""
    return dim_deg(ideal_sum(I, J))[0]


def _points(ring: Ring, pts) -> list[list]:
    field = ring.field
    out = []
    for p in pts:
        p = [field(c) for c in p]
        if len(p) != ring.nvars:
            raise ValueError("point has the wrong number of coordinates")
        out.append(p)
    return out


def linear_subspace_ideal(ring: Ring, forms: Sequence) -> Ideal:
    """Ideal generated by independent linear forms."""
    return LinearSubspace(ring, forms).ideal()


def _single(ring: Ring, name: str, kind: str, ideal: Ideal, degree: int, span_dim: int, rows=None) -> Curve:
    comp = Component(name, kind, ideal, degree, span_dim, rows)
    return Curve(ideal, [comp])


def linear_curve(ring: Ring, p: Sequence, q: Sequence, name: str = "line") -> Curve:
    """The line through two distinct points."""
    p, q = _points(ring, [p, q])
    if rank([p, q], ring.field) < 2:
        raise ConstructionError("the two points coincide")
    L = LinearSubspace.from_points(ring, [p, q])
    rows = [[p[i], q[i]] for i in range(ring.nvars)]
    return _single(ring, name, "line", L.ideal(), 1, 1, rows)


def rational_normal_curve(ring: Ring, degree: int, rows: Sequence[Sequence], name: str = "rnc") -> Curve:
    """Rational normal curve ``(s:t) -> (sum_j rows[i][j] s^(d-j) t^j)_i``.

    ``rows`` is an ``(n+1) x (d+1)`` matrix of rank ``d+1``.  Writing
    ``y = R^+ x`` for a left inverse ``R^+``, the ideal is the linear forms
    vanishing on the column space plus the ``2 x 2`` minors of the Hankel
    matrix in ``y``.
    """
    d = degree
    if d < 1:
        raise ConstructionError("degree must be positive")
    field = ring.field
    if len(rows) != ring.nvars:
        raise ConstructionError(f"expected {ring.nvars} coefficient rows, got {len(rows)}")
    R = [[field(c) for c in r] for r in rows]
    if any(len(r) != d + 1 for r in R):
        raise ConstructionError(f"each coefficient row needs {d + 1} entries")
    cols = [[R[i][j] for i in range(ring.nvars)] for j in range(d + 1)]
    if rank(cols, field) != d + 1:
        raise ConstructionError("coefficient rows do not define a nondegenerate embedding")
    B = left_inverse(cols, field)  # (d+1) x (n+1)
    y = [ring.linear_form(b) for b in B]
    gens = [ring.linear_form(v) for v in nullspace(cols, ring.nvars, field)]
    for i in range(d):
        for j in range(i + 1, d):
            gens.append(y[i] * y[j + 1] - y[i + 1] * y[j])
    kind = "line" if d == 1 else ("conic" if d == 2 else "rnc")
    return _single(ring, name, kind, Ideal(ring, gens, saturated=True), d, d, R)


def plane_curve(ring: Ring, plane, form, name: str = "plane_curve", kind: str = "plane") -> Curve:
    """Plane curve in the 2-plane ``plane``.

    ``plane`` is a :class:`LinearSubspace` of dimension 2 or a list of three
    spanning points.  ``form`` is either a polynomial of the ambient ring or a
    form in three plane coordinates ``(u0, u1, u2)`` taken along the spanning
    points (given as a polynomial of a 3-variable ring or text in ``u0..u2``).
    """
    field = ring.field
    if isinstance(plane, LinearSubspace):
        Pi = plane
        pts = Pi.points()
    else:
        pts = _points(ring, plane)
        Pi = LinearSubspace.from_points(ring, pts)
    if Pi.dim != 2:
        raise ConstructionError("plane_curve needs a 2-plane")
    if isinstance(form, str) and any(f"u{k}" in form for k in range(3)) and not any(
            nm in form for nm in ring.names if nm not in ("u0", "u1", "u2")):
        form = Ring(3, field, ("u0", "u1", "u2")).parse(form)
    if isinstance(form, str):
        form = ring.parse(form)
    if not form:
        raise ConstructionError("zero form")
    if not form.is_homogeneous():
        raise ConstructionError("the form must be homogeneous")
    if form.ring.nvars == 3 and form.ring != ring:
        cols = [list(p) for p in pts]
        B = left_inverse(cols, field)
        form = form.substitute([ring.linear_form(b) for b in B])
    gens = list(Pi.forms()) + [form]
    I = Ideal(ring, gens, saturated=True)
    dim, deg = dim_deg(I)
    if dim != 1:
        raise ConstructionError("the form vanishes on the whole plane")
    return _single(ring, name, kind, I, deg, 2 if deg > 1 else 1)


def curve_union(parts: Sequence[Curve], names: dict | None = None) -> Curve:
    """Union of curves without common components (ideal intersection)."""
    if not parts:
        raise ValueError("need at least one curve")
    ring = parts[0].ring
    comps: list[Component] = []
    for P in parts:
        if P.ring != ring:
            raise ValueError("curves live in different ambient spaces")
        for c in P.components:
            for o in comps:
                if _meet(o.ideal, c.ideal) >= 1:
                    raise ConstructionError(f"components {o.name} and {c.name} share a curve")
            comps.append(c)
    I = parts[0].ideal
    for P in parts[1:]:
        I = ideal_intersect(I, P.ideal)
    I.saturated = True
    merged: dict = {}
    for P in parts:
        merged.update(P.parts)
    if names:
        merged.update(names)
    return Curve(I, comps, merged)


def is_connected(C: Curve) -> bool:
    return nx.is_connected(C.incidence_graph)


# -- trees -------------------------------------------------------------------


@dataclass(frozen=True)
class TreeStep:
    """One rational normal curve of a tree.

    ``attach`` is ``(component index, (s, t))``: the gluing point on an
    earlier component.  ``directions`` optionally gives the extra points
    spanning the new component's span together with the gluing point; by
    default fresh coordinate points are used.
    """

    degree: int
    attach: tuple | None = None
    directions: tuple | None = None


@dataclass(frozen=True)
class TreeSpec:
    steps: tuple[TreeStep, ...]
    ambient: int | None = None


def tree(spec: TreeSpec, field: Field = GF32003) -> Curve:
    """A linearly normal tree of rational normal curves, each gluing step verified."""
    steps = list(spec.steps)
    if not steps or steps[0].attach is not None:
        raise ConstructionError("the first step must not be attached")
    n = spec.ambient if spec.ambient is not None else max(2, sum(s.degree for s in steps))
    ring = Ring(n + 1, field)
    fresh = iter(range(n + 1))

    def unit(i):
        return [int(j == i) for j in range(n + 1)]

    curve: Curve | None = None
    for idx, step in enumerate(steps):
        d = step.degree
        if idx == 0:
            cols = [unit(next(fresh)) for _ in range(d + 1)] if step.directions is None else \
                [list(p) for p in step.directions]
        else:
            ci, (s, t) = step.attach
            p = curve.components[ci].point(s, t)
            if step.directions is None:
                try:
                    others = [unit(next(fresh)) for _ in range(d)]
                except StopIteration:
                    raise ConstructionError("ambient space too small for the tree") from None
            else:
                others = [list(q) for q in step.directions]
            cols = [p] + others
        if len(cols) != d + 1:
            raise ConstructionError(f"step {idx} needs {d + 1} spanning points")
        rows = [[cols[j][i] for j in range(d + 1)] for i in range(n + 1)]
        D = rational_normal_curve(ring, d, rows, name=f"T{idx}")
        if curve is None:
            curve = D
            continue
        meet = subspace_meet(curve.span(), D.span())
        if meet.dim != 0:
            raise ConstructionError(f"step {idx}: spans meet in dimension {meet.dim}, not a single point")
        X = saturate(ideal_sum(curve.ideal, D.ideal))
        if X != meet.ideal():
            raise ConstructionError(f"step {idx}: the curves do not meet exactly in the span intersection")
        curve = curve_union([curve, D])
    curve.parts["tree"] = True
    return curve


# -- the P^4 family of maximal regularity without extremal secant lines ------


def _require(cond: bool, what: str):
    if not cond:
        raise ConstructionError(f"construction condition failed: {what}")


def giaimo_curve(m: int, variant: str = "fermat", field: Field = GF32003) -> Curve:
    """Degree ``m + 2`` curve in ``P^4`` with ``reg = Ξ = m`` and no extremal secant line.

    Fixed coordinates: planes ``L = {x3 = x4 = 0}``, ``M = {x0 = x4 = 0}``,
    ``N = {x1 = x3 = 0}``; line ``K = {x2 = x3 = x4 = 0}`` through ``P = e1``
    and ``Q = e0``; conics ``F = V(x0, x4, x2^2 - x1 x3)`` and
    ``G = V(x1, x3, x2^2 - x0 x4)`` touching ``L`` in double points at ``P``
    and ``Q``; ``E`` a curve of degree ``m - 3`` in ``L`` avoiding ``P`` and
    ``Q`` (the Fermat curve, or ``m - 3`` lines with ``variant="lines"``).
    """
    if m < 4:
        raise ConstructionError("m must be at least 4")
    if variant not in ("fermat", "lines"):
        raise ValueError("variant must be 'fermat' or 'lines'")
    ring = Ring(5, field)
    x = ring.gens
    L = LinearSubspace(ring, [x[3], x[4]])
    M = LinearSubspace(ring, [x[0], x[4]])
    N = LinearSubspace(ring, [x[1], x[3]])
    P = [0, 1, 0, 0, 0]
    Q = [1, 0, 0, 0, 0]
    K = plane_curve(ring, L, x[2], name="K", kind="line")
    F = plane_curve(ring, M, x[2] ** 2 - x[1] * x[3], name="F", kind="conic")
    G = plane_curve(ring, N, x[2] ** 2 - x[0] * x[4], name="G", kind="conic")
    k = m - 3
    if variant == "fermat":
        e_form = x[0] ** k + x[1] ** k + x[2] ** k
        E_parts = [plane_curve(ring, L, e_form, name="E", kind="plane")]
    else:
        E_parts = [plane_curve(ring, L, x[0] + x[1] * (j + 1) + x[2] * (j + 2), name=f"E{j}", kind="line")
                   for j in range(k)]
        e_form = 1
        for j in range(k):
            e_form = e_form * (x[0] + x[1] * (j + 1) + x[2] * (j + 2))

    # incidences of the three planes and the line K
    _require(subspace_meet(M, L).dim == 1 and subspace_meet(N, L).dim == 1, "M and N meet L in lines")
    _require(subspace_meet(M, L) != subspace_meet(N, L), "M and N meet L in distinct lines")
    _require(subspace_meet(M, N).dim == 0, "M and N meet in a single point")
    KM = saturate(ideal_sum(K.ideal, M.ideal()))
    KN = saturate(ideal_sum(K.ideal, N.ideal()))
    _require(KM == LinearSubspace.from_points(ring, [P]).ideal(), "K meets M exactly at P")
    _require(KN == LinearSubspace.from_points(ring, [Q]).ideal(), "K meets N exactly at Q")
    for C, pt, nm in ((F, P, "F"), (G, Q, "G")):
        X = saturate(ideal_sum(C.ideal, L.ideal()))
        _require(dim_deg(X) == (0, 2), f"{nm} meets L in a scheme of length 2")
        _require(X.issubset(LinearSubspace.from_points(ring, [pt]).ideal()), f"{nm} ∩ L is supported at one point")
        _require(K.ideal.issubset(LinearSubspace.from_points(ring, [pt]).ideal()), f"the point of {nm} ∩ L lies on K")
        _require(not X == LinearSubspace.from_points(ring, [pt]).ideal(), f"{nm} ∩ L is a double point")
    _require(e_form(P) != 0 and e_form(Q) != 0, "E avoids P and Q")
    _require(not Ideal(ring, [x[2]]).contains(e_form), "E does not contain K")

    C = curve_union([K, F, G] + E_parts)
    C.parts.update({"L": L, "M": M, "N": N, "P": P, "Q": Q, "m": m,
                    "K": K, "F": F, "G": G, "E": E_parts[0] if len(E_parts) == 1 else curve_union(E_parts),
                    "E_form": e_form,
                    # a line of L through P other than K, and one avoiding P and Q
                    "H_P": LinearSubspace(ring, [x[0], x[3], x[4]]),
                    "H_avoid": LinearSubspace(ring, [x[3], x[4], x[2] - x[0] - x[1] * 2])})
    return C


# -- conic plus twisted cubic --------------------------------------------------


@dataclass
class TwistedConfig:
    C: Curve        # conic
    D: Curve        # twisted cubic
    union: Curve
    L: LinearSubspace  # secant line of D through e0, e3
    M: LinearSubspace  # line meeting D and L, not a secant
    Pi: LinearSubspace  # span of the conic
    N: LinearSubspace  # span of the twisted cubic


def twisted_config(field: Field = GF32003) -> TwistedConfig:
    """Conic ``C`` and twisted cubic ``D`` in ``P^4`` whose union has Ξ = 3 and an extremal secant line.

    ``D`` is the image of ``(s^3 : s^2 t : s t^2 : t^3 : 0)`` in ``N = {x4 = 0}``;
    ``L`` joins ``e0`` and ``e3``; ``M`` joins ``(1:1:1:1:0)`` on ``D`` and
    ``(1:0:0:1:0)`` on ``L``; ``C`` is ``u v = w^2`` in the plane
    ``Π = {x1 = x2, x0 = x3}`` with ``(u, v, w) -> (u+v : v : v : u+v : w)``.
    """
    ring = Ring(5, field)
    x = ring.gens
    rows = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [0, 0, 0, 0]]
    D = rational_normal_curve(ring, 3, rows, name="D")
    N = LinearSubspace(ring, [x[4]])
    L = LinearSubspace.from_points(ring, [[1, 0, 0, 0, 0], [0, 0, 0, 1, 0]])
    M = LinearSubspace.from_points(ring, [[1, 1, 1, 1, 0], [1, 0, 0, 1, 0]])
    Pi = LinearSubspace(ring, [x[1] - x[2], x[0] - x[3]])
    C = plane_curve(ring, [[1, 0, 0, 1, 0], [1, 1, 1, 1, 0], [0, 0, 0, 0, 1]], "u0*u1 - u2^2", name="C",
                    kind="conic")
    MD = saturate(ideal_sum(D.ideal, M.ideal()))
    _require(dim_deg(MD) == (0, 1), "M meets D in a single reduced point")
    _require(dim_deg(saturate(ideal_sum(L.ideal(), M.ideal()))) == (0, 1), "M meets L")
    _require(C.span() == Pi, "the conic spans Π")
    _require(not N.ideal().issubset(C.ideal) and not C.ideal.contains(x[4]), "the conic is not contained in N")
    _require(subspace_meet(C.span(), D.span()) == M, "the spans of C and D meet in M")
    _require(dim_deg(saturate(ideal_sum(C.ideal, D.ideal))) == (0, 1), "C meets D in one point")
    _require(dim_deg(saturate(ideal_sum(C.ideal, L.ideal()))) == (0, 1), "C meets L in one point")
    U = curve_union([C, D])
    return TwistedConfig(C, D, U, L, M, Pi, N)


# -- seeded random connected curves -------------------------------------------


@dataclass(frozen=True)
class Budget:
    max_components: int = 4
    max_degree: int = 8
    max_ambient: int = 6


def _random_point_in(ring: Ring, basis: list[list], rng: random.Random) -> list:
    field = ring.field
    coeffs = [field.random_element(rng, nonzero=False) for _ in basis]
    return [field(sum(c * b[i] for c, b in zip(coeffs, basis))) for i in range(ring.nvars)]


def random_connected_curve(seed: int, budget: Budget = Budget(), field: Field = GF32003,
                           attempts: int = 20) -> Curve:
    """Seeded random connected curve glued from lines, conics, rational normal and plane curves.

    Each new component passes through a point of an existing rational
    component; its span shares ``k`` extra points with the current span, with
    ``k`` recorded (the span intersection then has dimension ``k``, or more if
    the spans are forced to overlap by the ambient dimension).
    """
    if budget.max_degree < 1 or budget.max_components < 1 or budget.max_ambient < 2:
        raise ValueError("budget too small")
    rng = random.Random(seed)
    for _ in range(attempts):
        try:
            return _random_curve_attempt(rng, budget, field)
        except ConstructionError:
            continue
    raise ConstructionError(f"no connected curve found for seed {seed} within {attempts} attempts")


def _random_curve_attempt(rng: random.Random, budget: Budget, field: Field) -> Curve:
    n = rng.randint(3, max(3, budget.max_ambient))
    ring = Ring(n + 1, field)
    total = rng.randint(2, max(2, budget.max_degree))
    ncomp = rng.randint(1, budget.max_components)
    degrees = []
    left = total
    for i in range(ncomp):
        if left <= 0:
            break
        d = rng.randint(1, min(3, left)) if i < ncomp - 1 else min(left, rng.randint(1, 3))
        degrees.append(min(d, n))
        left -= degrees[-1]
    every = [[int(i == j) for j in range(n + 1)] for i in range(n + 1)]
    curve: Curve | None = None
    meets = []
    for idx, d in enumerate(degrees):
        if curve is None:
            pts = [_random_point_in(ring, every, rng) for _ in range(d + 1)]
        else:
            rational = [c for c in curve.components if c.rows is not None]
            host = rng.choice(rational)
            p = host.point(field.random_element(rng), 1)
            cur = curve.span().points()
            k = rng.choice([0, 0, 1, 2])
            k = min(k, d, len(cur) - 1)
            shared = [_random_point_in(ring, cur, rng) for _ in range(k)]
            fresh = [_random_point_in(ring, every, rng) for _ in range(d - k)]
            pts = [p] + shared + fresh
            meets.append(k)
        if rank(pts, field) != d + 1:
            raise ConstructionError("dependent spanning points")
        use_plane = curve is not None and d == 3 and rng.random() < 0.3
        if use_plane:
            plane_pts = pts[:3]
            u = Ring(3, field, ("u0", "u1", "u2"))
            mons = [e for e in u.monomials_of_degree(3) if e != (3, 0, 0)]
            form = Polynomial(u, {e: field.random_element(rng) for e in mons})
            D = plane_curve(ring, plane_pts, form, name=f"C{idx}")
        else:
            rows = [[pts[j][i] for j in range(d + 1)] for i in range(n + 1)]
            D = rational_normal_curve(ring, d, rows, name=f"C{idx}")
        curve = D if curve is None else curve_union([curve, D])
    if not is_connected(curve):
        raise ConstructionError("not connected")
    curve.parts["span_meets"] = meets
    curve.parts["seed_degrees"] = degrees
    return curve


__all__ = [
    "Budget", "Component", "ConstructionError", "Curve", "TreeSpec", "TreeStep", "TwistedConfig",
    "curve_union", "giaimo_curve", "is_connected", "linear_curve", "linear_subspace_ideal", "plane_curve",
    "random_connected_curve", "rational_normal_curve", "tree", "twisted_config",
]
