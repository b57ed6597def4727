"""Instance-level checks of regularity bounds and structure statements for curves.

Each check returns a :class:`CheckReport`.  A report stores the computed
quantities and a list of :class:`Claim` objects (comparisons between those
quantities); the verdict is recomputed from the claims alone, so a serialized
report certifies itself.  Checks never try to prove universal statements:
they evaluate the statement on the given instance.
"""

from __future__ import annotations

import itertools
import json
import random
import time
from dataclasses import dataclass, field as dc_field
from typing import Any, Callable, Sequence

from .curves import (Component, ConstructionError, Curve, TreeSpec, TreeStep, curve_union, giaimo_curve,
                     is_connected, linear_curve, random_connected_curve, rational_normal_curve, tree)
from .geometry import LinearSubspace, random_subspace, restrict, secant_degree, section, span, subspace_meet, xi
from .ideals import Ideal, ideal_intersect, ideal_sum, saturate
from .invariants import dim_deg, saturation_degree
from .linalg import nullspace
from .polyring import GF32003, Field, Polynomial, Ring
from .resolution import (betti_numbers, find_extremal_line_planar, hilbert_burch_degrees, regularity,
                         regularity_crosscheck)

PASS, FAIL, INAPPLICABLE = "pass", "fail", "inapplicable"

_OPS: dict[str, Callable[[Any, Any], bool]] = {
    "<=": lambda a, b: a <= b,
    "<": lambda a, b: a < b,
    "==": lambda a, b: a == b,
    ">=": lambda a, b: a >= b,
    "!=": lambda a, b: a != b,
    "implies": lambda a, b: (not a) or bool(b),
    "iff": lambda a, b: bool(a) == bool(b),
}


@dataclass(frozen=True)
class Claim:
    """``lhs op rhs`` with plain JSON values."""

    what: str
    lhs: Any
    op: str
    rhs: Any

    @property
    def holds(self) -> bool:
        return _OPS[self.op](self.lhs, self.rhs)

    def to_json(self) -> dict:
        return {"what": self.what, "lhs": self.lhs, "op": self.op, "rhs": self.rhs}


@dataclass
class CheckReport:
    check: str
    inputs: dict
    quantities: dict = dc_field(default_factory=dict)
    claims: list[Claim] = dc_field(default_factory=list)
    applicable: bool = True
    reason: str = ""
    seed: int | None = None
    runtime: float = 0.0

    @property
    def verdict(self) -> str:
        if not self.applicable:
            return INAPPLICABLE
        return PASS if all(c.holds for c in self.claims) else FAIL

    @property
    def failed(self) -> list[Claim]:
        return [c for c in self.claims if not c.holds]

    def claim(self, what: str, lhs, op: str, rhs) -> bool:
        c = Claim(what, lhs, op, rhs)
        self.claims.append(c)
        return c.holds

    def skip(self, reason: str) -> "CheckReport":
        self.applicable = False
        self.reason = reason
        return self

    def to_json(self, include_runtime: bool = False) -> dict:
        out = {"check": self.check, "inputs": self.inputs, "seed": self.seed, "verdict": self.verdict,
               "applicable": self.applicable, "reason": self.reason, "quantities": self.quantities,
               "claims": [c.to_json() for c in self.claims]}
        if include_runtime:
            out["runtime"] = round(self.runtime, 3)
        return out

    def to_jsonl(self, include_runtime: bool = False) -> str:
        return json.dumps(self.to_json(include_runtime), sort_keys=True, ensure_ascii=False)

    @classmethod
    def from_json(cls, data: dict) -> "CheckReport":
        claims = [Claim(c["what"], c["lhs"], c["op"], c["rhs"]) for c in data.get("claims", [])]
        return cls(data["check"], data.get("inputs", {}), data.get("quantities", {}), claims,
                   data.get("applicable", True), data.get("reason", ""), data.get("seed"),
                   data.get("runtime", 0.0))

    def summary(self) -> str:
        text = f"{self.check:<22} {self.verdict:<12} {json.dumps(self.inputs, sort_keys=True)}"
        if not self.applicable:
            text += f"  ({self.reason})"
        elif self.failed:
            text += "  failed: " + "; ".join(c.what for c in self.failed)
        return text


def recompute_verdict(data: dict) -> str:
    """Verdict of a serialized report, from its claims alone."""
    if not data.get("applicable", True):
        return INAPPLICABLE
    ok = all(_OPS[c["op"]](c["lhs"], c["rhs"]) for c in data.get("claims", []))
    return PASS if ok else FAIL


def _timed(fn):
    def wrapper(*args, **kwargs):
        t0 = time.perf_counter()
        rep = fn(*args, **kwargs)
        rep.runtime = time.perf_counter() - t0
        return rep
    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


def _describe(C) -> dict:
    if isinstance(C, Curve):
        return {"components": [c.name for c in C.components], "nvars": C.ring.nvars}
    if isinstance(C, Ideal):
        return {"ideal": [g.render() for g in C.gens[:8]], "nvars": C.ring.nvars}
    return {"value": str(C)}


def _single_curve(comp: Component) -> Curve:
    return Curve(comp.ideal, [comp])


def _subcurve(comps: Sequence[Component]) -> Curve:
    return curve_union([_single_curve(c) for c in comps]) if len(comps) > 1 else _single_curve(comps[0])


def _is_line(C: Curve) -> bool:
    return dim_deg(C.ideal) == (1, 1)


def _maximal(C: Curve) -> tuple[int, int, bool]:
    r = regularity(C.ideal)
    x = xi(C).xi
    return r, x, r == x


# -- main bound and its relatives --------------------------------------------


@_timed
def check_main_theorem(C: Curve, seed: int | None = None) -> CheckReport:
    """``reg(I_C) <= deg C - dim Span C + 2`` for a connected reduced curve."""
    rep = CheckReport("main_theorem", _describe(C), seed=seed)
    if not is_connected(C):
        return rep.skip("disconnected curve")
    X = xi(C)
    r = regularity(C.ideal)
    rep.quantities.update(degree=X.degree, span_dim=X.span_dim, xi=X.xi, reg=r, maximal=r == X.xi)
    # syzygies in degree xi + i under both indexing conventions (F_0 = S, or F_0 = generators of I)
    B = betti_numbers(C.ideal)
    rep.quantities["syzygies_at_xi_plus_i"] = {
        "quotient": [B[(i, X.xi + i)] for i in range(B.length + 1)],
        "ideal": [B[(i + 1, X.xi + i)] for i in range(B.length)],
    }
    rep.claim("reg <= xi", r, "<=", X.xi)
    return rep


@_timed
def check_caviglia(I: Ideal, J: Ideal, seed: int | None = None) -> CheckReport:
    """Sum and intersection regularity bounds when ``dim S/(I+J) <= 1``."""
    rep = CheckReport("caviglia", {"I": _describe(I), "J": _describe(J)}, seed=seed)
    for name, K in (("I", I), ("J", J)):
        if K.is_zero() or K.is_unit():
            return rep.skip(f"{name} is not a proper nonzero ideal")
    S = ideal_sum(I, J)
    krull = dim_deg(S)[0] + 1
    rep.quantities["krull_dim_sum"] = krull
    if krull > 1:
        return rep.skip(f"dim S/(I+J) = {krull} > 1")
    ri, rj = regularity(I), regularity(J)
    rs, rx = regularity(S), regularity(ideal_intersect(I, J))
    rep.quantities.update(reg_I=ri, reg_J=rj, reg_sum=rs, reg_intersection=rx)
    rep.claim("reg(I+J) <= reg I + reg J - 1", rs, "<=", ri + rj - 1)
    rep.claim("reg(I∩J) <= reg I + reg J", rx, "<=", ri + rj)
    return rep


@_timed
def check_intadd(X: Ideal, Y: Ideal, seed: int | None = None) -> CheckReport:
    """``deg(X ∪ Y) = deg X + deg Y - deg(X ∩ Y)`` for finite schemes."""
    rep = CheckReport("intadd", {"X": _describe(X), "Y": _describe(Y)}, seed=seed)
    dx, dy = dim_deg(X), dim_deg(Y)
    if dx[0] != 0 or dy[0] != 0:
        raise ValueError("check_intadd needs two finite schemes")
    U = ideal_intersect(X, Y)
    M = saturate(ideal_sum(X, Y))
    du = dim_deg(U)[1]
    dm = dim_deg(M)[1]
    rep.quantities.update(deg_X=dx[1], deg_Y=dy[1], deg_union=du, deg_meet=dm)
    rep.claim("deg(X∪Y) = deg X + deg Y - deg(X∩Y)", du, "==", dx[1] + dy[1] - dm)
    return rep


@_timed
def check_xi_sum(C: Curve, D: Curve, seed: int | None = None) -> CheckReport:
    """``Ξ(C ∪ D) = Ξ(C) + Ξ(D) + dim(Span C ∩ Span D) - 2``."""
    rep = CheckReport("xi_sum", {"C": _describe(C), "D": _describe(D)}, seed=seed)
    U = curve_union([C, D])  # raises on a shared component
    meet = subspace_meet(C.span(), D.span()).dim
    xc, xd, xu = xi(C).xi, xi(D).xi, xi(U).xi
    rep.quantities.update(xi_C=xc, xi_D=xd, xi_union=xu, span_meet_dim=meet)
    rep.claim("xi(C∪D) = xi(C) + xi(D) + dim meet - 2", xu, "==", xc + xd + meet - 2)
    return rep


@_timed
def check_mincur(C: Curve, seed: int | None = None) -> CheckReport:
    """Tree tag ⇒ Ξ = 2 ⇒ reg <= 2, and reg <= 2 ⇒ Ξ = 2."""
    rep = CheckReport("mincur", _describe(C), seed=seed)
    if not is_connected(C):
        return rep.skip("disconnected curve")
    tagged = bool(C.parts.get("tree", False))
    r = regularity(C.ideal)
    x = xi(C).xi
    rep.quantities.update(tree_tag=tagged, xi=x, reg=r, line=_is_line(C))
    rep.claim("tree ⇒ xi = 2", tagged, "implies", x == 2)
    rep.claim("xi = 2 ⇒ reg <= 2", x == 2, "implies", r <= 2)
    rep.claim("reg <= 2 ⇒ xi = 2", r <= 2, "implies", x == 2)
    return rep


# -- the P^4 family -----------------------------------------------------------


def _line_through(ring: Ring, p, q) -> LinearSubspace:
    return LinearSubspace.from_points(ring, [p, q])


def _two_k_vanishing(C: Curve, m: int) -> bool:
    """Every generator of degree ``<= m - 1`` restricts to a multiple of ``x2^2`` on ``L``."""
    ring = C.ring
    x = ring.gens
    zero = ring.zero()
    images = [x[0], x[1], x[2], zero, zero]
    for g in C.ideal.gb().basis:
        if g.degree() > m - 1:
            continue
        h = g.substitute(images)
        if any(e[2] < 2 for e in h.coeffs):
            return False
    return True


@_timed
def check_construction(m: int, seed: int = 0, random_lines: int = 50, family_lines: int = 5,
                       hyperplanes: int = 3) -> CheckReport:
    """Regularity, generator degree, the ``2K`` vanishing and the secant-line table of the ``P^4`` family."""
    if m < 4:
        raise ValueError("m must be at least 4")
    rep = CheckReport("construction", {"m": m}, seed=seed)
    C = giaimo_curve(m)
    ring = C.ring
    field = ring.field
    rng = random.Random(seed)
    X = xi(C)
    r = regularity(C.ideal)
    B = betti_numbers(C.ideal).shifted()
    rep.quantities.update(degree=X.degree, span_dim=X.span_dim, xi=X.xi, reg=r, beta_0m=B[(0, m)])
    rep.claim("deg = m + 2", X.degree, "==", m + 2)
    rep.claim("span is P^4", X.span_dim, "==", 4)
    rep.claim("xi = m", X.xi, "==", m)
    rep.claim("reg = m", r, "==", m)
    rep.claim("a generator of degree m", B[(0, m)], ">=", 1)
    vanish = _two_k_vanishing(C, m)
    rep.quantities["two_k_vanishing"] = vanish
    rep.claim("low-degree forms vanish on 2K", vanish, "==", True)

    L, M, N = C.parts["L"], C.parts["M"], C.parts["N"]
    P, Q = C.parts["P"], C.parts["Q"]
    planes = (L, M, N)
    table: dict[str, list[int]] = {}

    def record(key: str, line: LinearSubspace):
        table.setdefault(key, []).append(secant_degree(C, line))

    record("H_P", C.parts["H_P"])
    record("H_avoid", C.parts["H_avoid"])
    count = 0
    while count < random_lines:
        line = random_subspace(ring, 1, rng)
        if any(pl.contains(line) for pl in planes):
            continue
        record("off_planes", line)
        count += 1

    def in_plane(plane, exclude, through=None, avoid=()):
        out = 0
        while out < family_lines:
            if through is None:
                line = random_subspace(ring, 1, rng, inside=plane)
            else:
                q = random_subspace(ring, 0, rng, inside=plane).points()[0]
                if LinearSubspace.from_points(ring, [through, q]).dim != 1:
                    continue
                line = _line_through(ring, through, q)
            if exclude is not None and exclude.contains(line):
                continue
            if any(line.contains_point(a) for a in avoid):
                continue
            if line == LinearSubspace(ring, [ring.gens[2], ring.gens[3], ring.gens[4]]):
                continue  # K itself
            out += 1
            yield line

    for line in in_plane(M, L):
        record("in_M", line)
    for line in in_plane(N, L):
        record("in_N", line)
    for line in in_plane(L, None, avoid=(P, Q)):
        record("in_L_avoiding_PQ", line)
    for line in in_plane(L, None, through=P):
        record("in_L_through_P", line)
    for line in in_plane(L, None, through=Q):
        record("in_L_through_Q", line)

    # chords joining points of K, F and G
    def point_on(name: str):
        s, t = field.random_element(rng), field.random_element(rng)
        return {"K": [s, t, 0, 0, 0], "F": [0, s * s, s * t, t * t, 0], "G": [s * s, 0, s * t, 0, t * t]}[name]

    for a, b in (("K", "F"), ("K", "G"), ("F", "G")):
        for _ in range(family_lines):
            line = _line_through(ring, point_on(a), point_on(b))
            if line.dim != 1 or any(pl.contains(line) for pl in planes):
                continue
            record("chords", line)

    rep.quantities["secant_table"] = {k: sorted(v) for k, v in sorted(table.items())}
    rep.claim("H_P is an (m-1)-secant", table["H_P"][0], "==", m - 1)
    rep.claim("H_avoid is an (m-2)-secant", table["H_avoid"][0], "==", m - 2)
    for key in ("off_planes", "in_M", "in_N", "chords"):
        if table.get(key):
            rep.claim(f"{key} lines are at most 3-secant", max(table[key]), "<=", 3)
    rep.claim("lines of L avoiding P, Q are (m-2)-secant", sorted(set(table["in_L_avoiding_PQ"])), "==", [m - 2])
    rep.claim("lines of L through P are (m-1)-secant", sorted(set(table["in_L_through_P"])), "==", [m - 1])
    rep.claim("lines of L through Q are (m-1)-secant", sorted(set(table["in_L_through_Q"])), "==", [m - 1])
    top = max(max(v) for v in table.values())
    rep.quantities["max_secant"] = top
    rep.claim("no tested line is extremal", top, "<", X.xi)

    # hyperplane sections avoiding Q: the residual of G is a length-2 scheme off the plane of the rest
    EFK = curve_union([C.parts["E"], C.parts["F"], C.parts["K"]])
    G = C.parts["G"]
    x4 = ring.gens[4]
    sections = []
    tries = 0
    while len(sections) < hyperplanes and tries < 10 * hyperplanes:
        tries += 1
        H = random_subspace(ring, 3, rng)
        if H.contains_point(Q):
            continue
        Xs, Ys = section(EFK, H), section(G, H)
        if dim_deg(Xs)[0] != 0 or dim_deg(Ys) != (0, 2):
            continue
        O = restrict(Ideal(ring, [x4]), H)
        if not saturate(ideal_sum(Ys, O)).is_unit() or not O.issubset(Xs):
            continue
        rx = regularity(Xs)
        ru = regularity(ideal_intersect(Xs, Ys))
        sections.append((dim_deg(Xs)[1], rx, ru))
    rep.quantities["hyperplane_sections"] = [list(t) for t in sections]
    for k, (dx, rx, ru) in enumerate(sections):
        rep.claim(f"section {k}: reg(X∪Y) <= reg X", ru, "<=", rx)
    return rep


# -- structure of unions ------------------------------------------------------


def _line_in_plane(ring: Ring, plane: LinearSubspace, form: Polynomial) -> LinearSubspace:
    """The line of ``plane`` cut out by a linear form in plane coordinates."""
    field = ring.field
    pts = plane.points()
    row = [field(0)] * len(pts)
    for e, c in form.coeffs.items():
        row[e.index(1)] = c
    vecs = nullspace([row], len(pts), field)
    images = [[field(sum(v[j] * pts[j][i] for j in range(len(pts)))) for i in range(ring.nvars)] for v in vecs]
    return LinearSubspace.from_points(ring, images)


def _plane_extremal_line(U: Curve, plane: LinearSubspace, target: int):
    """A line of ``plane`` meeting ``U`` in a scheme of length ``target``, or ``None``."""
    Z = section(U, plane)
    if Z.is_unit():
        return None
    try:
        m = find_extremal_line_planar(Z)
    except ValueError:
        return None
    if m is None:
        return None
    line = _line_in_plane(U.ring, plane, m)
    try:
        return line if secant_degree(U, line) == target else None
    except ValueError:
        return None


def _components_in(C: Curve, sub: LinearSubspace) -> list[str]:
    forms = sub.forms()
    return [c.name for c in C.components if all(c.ideal.contains(f) for f in forms)]


def _render_subspace(S: LinearSubspace) -> list[str]:
    return [f.render() for f in S.forms()]


@_timed
def check_structure_props(C: Curve, D: Curve, seed: int | None = None) -> CheckReport:
    """Maximal regularity of ``C ∪ D`` against the span-intersection case analysis."""
    rep = CheckReport("structure_props", {"C": _describe(C), "D": _describe(D)}, seed=seed)
    if not (is_connected(C) and is_connected(D)):
        return rep.skip("a part is disconnected")
    try:
        U = curve_union([C, D])
    except ConstructionError as exc:
        return rep.skip(str(exc))
    if dim_deg(ideal_sum(C.ideal, D.ideal))[0] < 0:
        return rep.skip("the curves do not meet")
    meet = subspace_meet(C.span(), D.span())
    d = meet.dim
    rc, xc, mc = _maximal(C)
    rd, xd, md = _maximal(D)
    ru, xu, mu = _maximal(U)
    lc, ld = _is_line(C), _is_line(D)
    rep.quantities.update(span_meet_dim=d, reg_C=rc, xi_C=xc, reg_D=rd, xi_D=xd, reg_union=ru, xi_union=xu,
                          maximal_union=mu)
    rep.claim("maximal union ⇒ span meet dim <= 2", mu, "implies", d <= 2)
    rep.claim("maximal union ⇒ C is a line or maximal", mu, "implies", lc or mc)
    rep.claim("maximal union ⇒ D is a line or maximal", mu, "implies", ld or md)
    case = "none"
    if d == 0:
        case = "point_meet"
        A, Bc, ma, mb, la, lb = (C, D, mc, md, lc, ld) if xc <= xd else (D, C, md, mc, ld, lc)
        xa = min(xc, xd)
        rep.claim("maximal ⇔ the smaller part is a tree and the other a line or maximal",
                  mu, "iff", xa == 2 and (lb or mb))
    elif d == 1:
        lines_in = [nm for nm, X in (("C", C), ("D", D)) if X.ideal.issubset(meet.ideal())]
        rep.quantities["meet_line"] = _render_subspace(meet)
        if lines_in:
            case = "line_in_union"
            A, Bc, xa = (C, D, xc) if lines_in[0] == "C" else (D, C, xd)
            Lc = linear_curve(C.ring, *meet.points(), name="meet")
            LB = curve_union([Lc, Bc])
            rl, xl, ml = _maximal(LB)
            mb = _maximal(Bc)[2]
            rep.quantities.update(reg_line_union=rl, xi_line_union=xl)
            rep.claim("maximal ⇔ tree part and maximal line union", mu, "iff", xa == 2 and ml)
            rep.claim("maximal line union ⇒ other part maximal", ml, "implies", mb)
        elif xc >= 3 and xd >= 3:
            case = "line_meet"
            su = secant_degree(U, meet)
            sc, sd = secant_degree(C, meet), secant_degree(D, meet)
            cd = dim_deg(saturate(ideal_sum(C.ideal, D.ideal)))[1]
            rep.quantities.update(secant_union=su, secant_C=sc, secant_D=sd, deg_meet=cd)
            rep.claim("maximal ⇔ the meet line is extremal", mu, "iff", su == xu)
            rep.claim("maximal ⇒ the parts meet in one point", mu, "implies", cd == 1)
            rep.claim("maximal ⇒ the meet line is extremal for both parts", mu, "implies", sc == xc and sd == xd)
        else:
            case = "line_meet_with_tree_part"
    elif d == 2:
        in_c, in_d = _components_in(C, meet), _components_in(D, meet)
        rep.quantities["meet_plane"] = _render_subspace(meet)
        plane_whole = [nm for nm, X in (("C", C), ("D", D)) if meet.ideal().issubset(X.ideal)]
        if not in_c and not in_d:
            case = "plane_meet"
        elif len(plane_whole) == 1 and not (in_c if plane_whole == ["D"] else in_d):
            case = "plane_contains_part"
        if case != "none":
            line = _plane_extremal_line(U, meet, xu)
            rep.quantities["extremal_line"] = _render_subspace(line) if line is not None else None
            rep.claim("maximal ⇔ an extremal line in the meet plane", mu, "iff", line is not None)
        else:
            case = "plane_meet_with_components"
    rep.quantities["case"] = case
    return rep


@_timed
def check_p3_theorem(C: Curve, seed: int = 0, hyperplanes: int = 4) -> CheckReport:
    """A connected curve of ``P^3`` without lines: maximal ⇒ Ξ = 3 or an extremal secant line."""
    rep = CheckReport("p3_theorem", _describe(C), seed=seed)
    ring = C.ring
    if ring.nvars != 4:
        return rep.skip("not a curve in P^3")
    if not is_connected(C):
        return rep.skip("disconnected curve")
    if any(dim_deg(c.ideal) == (1, 1) for c in C.components):
        return rep.skip("linear components present")
    r, x, mx = _maximal(C)
    rep.quantities.update(reg=r, xi=x, maximal=mx)
    found: LinearSubspace | None = None
    how = None
    if mx and x != 3:
        found, how = _search_extremal_line(C, x, seed, hyperplanes)
    rep.quantities["extremal_line"] = _render_subspace(found) if found is not None else None
    rep.quantities["found_by"] = how
    rep.claim("maximal ⇒ xi = 3 or an extremal secant line", mx, "implies", x == 3 or found is not None)
    # connected proper subcurves of a maximal curve are lines or maximal
    G = C.incidence_graph
    subs = []
    k = len(C.components)
    if k <= 5:
        for size in range(1, k):
            for idx in itertools.combinations(range(k), size):
                import networkx as nx
                if not nx.is_connected(G.subgraph(idx)):
                    continue
                S = _subcurve([C.components[i] for i in idx])
                rs, xs, ms = _maximal(S)
                subs.append({"components": [C.components[i].name for i in idx], "reg": rs, "xi": xs})
                rep.claim(f"maximal ⇒ subcurve {list(idx)} is a line or maximal", mx, "implies",
                          ms or _is_line(S))
    rep.quantities["subcurves"] = subs
    return rep


def _search_extremal_line(C: Curve, target: int, seed: int, hyperplanes: int):
    ring = C.ring
    S = C.span()
    if S.dim <= 2:
        rng = random.Random(seed)
        for _ in range(5):
            line = random_subspace(ring, 1, rng, inside=S) if S.dim >= 1 else None
            if line is None:
                break
            try:
                if secant_degree(C, line) == target:
                    return line, "planar"
            except ValueError:
                continue
    comps = C.components
    k = len(comps)
    import networkx as nx
    G = C.incidence_graph
    if 1 < k <= 6:
        for size in range(1, k // 2 + 1):
            for idx in itertools.combinations(range(k), size):
                rest = tuple(i for i in range(k) if i not in idx)
                if not (nx.is_connected(G.subgraph(idx)) and nx.is_connected(G.subgraph(rest))):
                    continue
                A = _subcurve([comps[i] for i in idx])
                B = _subcurve([comps[i] for i in rest])
                meet = subspace_meet(A.span(), B.span())
                if meet.dim == 1:
                    try:
                        if secant_degree(C, meet) == target:
                            return meet, "span meet line"
                    except ValueError:
                        pass
                elif meet.dim == 2:
                    line = _plane_extremal_line(C, meet, target)
                    if line is not None:
                        return line, "span meet plane"
    rng = random.Random(seed)
    for _ in range(hyperplanes):
        H = random_subspace(ring, 2, rng)
        if dim_deg(section(C, H))[0] != 0:
            continue
        line = _plane_extremal_line(C, H, target)
        if line is not None:
            return line, "hyperplane section"
    return None, None


# -- planar finite schemes ------------------------------------------------------


@_timed
def check_finite_in_plane(I: Ideal, seed: int | None = None) -> CheckReport:
    """``reg X <= d``; ``reg = d`` ⇒ collinear; ``reg = d - 1``, ``d != 4`` ⇒ a ``(d-1)``-secant line."""
    rep = CheckReport("finite_in_plane", _describe(I), seed=seed)
    if I.ring.nvars != 3:
        raise ValueError("expected a scheme in the plane")
    dim, d = dim_deg(I)
    if dim != 0:
        raise ValueError("expected a finite scheme")
    I = saturate(I)
    r = regularity(I)
    collinear = any(g.degree() == 1 for g in I.gb().basis)
    line = find_extremal_line_planar(I) if r == d - 1 and d != 4 else None
    rep.quantities.update(degree=d, reg=r, collinear=collinear,
                          line=line.render() if line is not None else None)
    rep.claim("reg <= d", r, "<=", d)
    rep.claim("reg = d ⇒ collinear", r == d, "implies", collinear)
    rep.claim("reg = d - 1 and d != 4 ⇒ a (d-1)-secant line", r == d - 1 and d != 4, "implies", line is not None)
    return rep


@_timed
def check_hilbert_burch(I: Ideal, d_curve: int = 0, seed: int | None = None) -> CheckReport:
    """Diagonal-degree identities of the Hilbert–Burch matrix of a planar scheme."""
    rep = CheckReport("hilbert_burch", {**_describe(I), "d_curve": d_curve}, seed=seed)
    if I.ring.nvars != 3:
        raise ValueError("expected a scheme in the plane")
    B = betti_numbers(saturate(I))
    if B.length < 2:
        return rep.skip("complete intersection of a curve (length-one resolution)")
    D = hilbert_burch_degrees(B, d_curve)
    rep.quantities.update(a=list(D.a), b=list(D.b), e=list(D.e), f=list(D.f), finite_degree=D.finite_degree,
                          failures=list(D.failures))
    rep.claim("all diagonal identities hold", list(D.failures), "==", [])
    dim, deg = dim_deg(I)
    if d_curve == 0:
        rep.claim("degree = sum e_i f_j", D.finite_degree, "==", deg)
    rep.claim("reg = b_1 - 1", D.regularity, "==", regularity(saturate(I)))
    return rep


@_timed
def check_curve_plus_points(D_ideal: Ideal, Y: Ideal, seed: int | None = None) -> CheckReport:
    """``reg(D ∪ Y) <= d + deg Y - deg(D ∩ Y)`` for a plane curve ``D`` and a finite scheme ``Y``."""
    rep = CheckReport("curve_plus_points", {"D": _describe(D_ideal), "Y": _describe(Y)}, seed=seed)
    d = dim_deg(D_ideal)[1]
    dy = dim_deg(Y)[1]
    dm = dim_deg(saturate(ideal_sum(D_ideal, Y)))[1]
    U = ideal_intersect(D_ideal, Y)
    r = regularity(U)
    rep.quantities.update(d=d, deg_Y=dy, deg_meet=dm, reg=r)
    bound = d + dy - dm
    rep.claim("reg(D ∪ Y) <= d + deg Y - deg(D ∩ Y)", r, "<=", bound)
    if r == bound and dm == 1:
        m = find_extremal_line_planar(U)
        rep.quantities["line"] = m.render() if m is not None else None
        rep.claim("equality with one common point ⇒ a (d + deg Y - 1)-secant line", m is not None, "==", True)
    return rep


@_timed
def check_saturation_regularity(I: Ideal, seed: int | None = None) -> CheckReport:
    """``reg I = max(reg I^sat, sat I)`` computed two ways."""
    rep = CheckReport("saturation_regularity", _describe(I), seed=seed)
    r = regularity(I)
    c = regularity_crosscheck(I)
    rep.quantities.update(reg=r, crosscheck=c, saturation_degree=saturation_degree(I))
    rep.claim("reg I = max(reg I^sat, sat I)", r, "==", c)
    return rep


# -- seeded instance generators ----------------------------------------------------


def point_ideal(ring: Ring, p) -> Ideal:
    return LinearSubspace.from_points(ring, [p]).ideal()


def double_point(ring: Ring, p, v) -> Ideal:
    """Length-two scheme at ``p`` pointing towards ``v``."""
    line = LinearSubspace.from_points(ring, [p, v])
    mp = LinearSubspace.from_points(ring, [p]).forms()
    gens = line.forms() + [a * b for a, b in itertools.combinations_with_replacement(mp, 2)]
    return Ideal(ring, gens, saturated=True)


def scheme_union(ring: Ring, pieces: Sequence[Ideal]) -> Ideal:
    out = pieces[0]
    for P in pieces[1:]:
        out = ideal_intersect(out, P)
    return out


def _rand_point(ring: Ring, rng: random.Random) -> list:
    while True:
        p = [ring.field.random_element(rng, nonzero=False) for _ in range(ring.nvars)]
        if any(p):
            return p


def _points_on_line(ring: Ring, a, b, k: int, rng: random.Random) -> list:
    field = ring.field
    pts = []
    seen = set()
    while len(pts) < k:
        t = field.random_element(rng, nonzero=False)
        if t in seen:
            continue
        seen.add(t)
        pts.append([field(ai + t * bi) for ai, bi in zip(a, b)])
    return pts


def random_planar_scheme(seed: int, kind: str | None = None, max_points: int = 6):
    """Seeded finite scheme in ``P^2``: ``(kind, ideal)``.

    Kinds: ``collinear`` (up to 7 points), ``collinear_plus_one``, ``four_general``,
    ``random`` (up to ``max_points`` points), ``with_double`` (points plus a double point).
    """
    rng = random.Random(seed)
    ring = Ring(3, GF32003)
    kind = kind or rng.choice(["collinear", "collinear_plus_one", "random", "with_double"])
    if kind == "collinear":
        k = rng.randint(1, 7)
        pts = _points_on_line(ring, _rand_point(ring, rng), _rand_point(ring, rng), k, rng)
        pieces = [point_ideal(ring, p) for p in pts]
    elif kind == "collinear_plus_one":
        k = rng.randint(2, 6)
        pts = _points_on_line(ring, _rand_point(ring, rng), _rand_point(ring, rng), k, rng)
        pieces = [point_ideal(ring, p) for p in pts + [_rand_point(ring, rng)]]
    elif kind == "four_general":
        pieces = [point_ideal(ring, _rand_point(ring, rng)) for _ in range(4)]
    elif kind == "random":
        pieces = [point_ideal(ring, _rand_point(ring, rng)) for _ in range(rng.randint(1, max_points))]
    elif kind == "with_double":
        pieces = [double_point(ring, _rand_point(ring, rng), _rand_point(ring, rng))]
        pieces += [point_ideal(ring, _rand_point(ring, rng)) for _ in range(rng.randint(1, max_points - 2))]
    else:
        raise ValueError(f"unknown kind {kind!r}")
    I = scheme_union(ring, pieces)
    I.saturated = True
    return kind, I


def random_curve_plus_points(seed: int) -> tuple[Ideal, Ideal, int]:
    """Seeded plane curve ``D`` and finite scheme ``Y`` in ``P^2``: ``(I_D, I_Y, deg D)``.

    ``D`` is a line, a conic or a reducible cubic with a rational
    parametrisation of one component, so that some points of ``Y`` can be
    put on ``D``; the rest are random (hence off ``D``).
    """
    rng = random.Random(seed)
    ring = Ring(3, GF32003)
    field = ring.field
    x0, x1, x2 = ring.gens
    kind = rng.choice(["line", "conic", "cubic"])
    if kind == "line":
        form, d = x2, 1
        on = lambda s, t: [s, t, 0]
    else:
        form, d = x0 * x1 - x2 ** 2, 2
        on = lambda s, t: [s * s, t * t, s * t]
        if kind == "cubic":
            form, d = form * (x0 + x1 * 2 + x2 * 3), 3
    k_on = rng.randint(0, 2)
    pts = [on(field.random_element(rng), 1) for _ in range(k_on)]
    pts += [_rand_point(ring, rng) for _ in range(rng.randint(1, 4))]
    return Ideal(ring, [form], saturated=True), scheme_union(ring, [point_ideal(ring, p) for p in pts]), d


def random_finite_pair(seed: int) -> tuple[Ideal, Ideal]:
    """Two finite schemes in ``P^2`` or ``P^3`` sharing some support."""
    rng = random.Random(seed)
    ring = Ring(rng.choice([3, 4]), GF32003)
    pool = [_rand_point(ring, rng) for _ in range(6)]
    shared = rng.randint(0, 2)
    xs = pool[:rng.randint(1, 3)]
    ys = pool[:shared] + pool[3:3 + rng.randint(1, 3)]
    X = [point_ideal(ring, p) for p in xs]
    Y = [point_ideal(ring, p) for p in ys]
    if rng.random() < 0.4:
        # a double point on a shared or new support
        X.append(double_point(ring, pool[0], _rand_point(ring, rng)))
    return scheme_union(ring, X), scheme_union(ring, Y)


def random_ideal_pair(seed: int) -> tuple[Ideal, Ideal]:
    """Ideals of two curves (or a curve and points) with at most a finite intersection."""
    rng = random.Random(seed)
    ring = Ring(rng.choice([4, 5]), GF32003)
    n = ring.nvars - 1

    def rnc_through(points: list, d: int) -> Curve:
        cols = points + [_rand_point(ring, rng) for _ in range(d + 1 - len(points))]
        rows = [[cols[j][i] for j in range(d + 1)] for i in range(n + 1)]
        return rational_normal_curve(ring, d, rows)

    for _ in range(20):
        try:
            d1 = rng.randint(1, min(3, n))
            A = rnc_through([], d1)
            mode = rng.choice(["curve", "curve", "points"])
            if mode == "curve":
                shared = [A.components[0].point(ring.field.random_element(rng), 1)
                          for _ in range(rng.randint(0, 2))]
                d2 = rng.randint(max(1, len(shared)), min(3, n))
                if len(shared) > d2:
                    shared = shared[:d2]
                Bc = rnc_through(shared, d2)
                if dim_deg(ideal_sum(A.ideal, Bc.ideal))[0] > 0:
                    continue
                return A.ideal, Bc.ideal
            pts = [_rand_point(ring, rng) for _ in range(rng.randint(1, 3))]
            if rng.random() < 0.5:
                pts.append(A.components[0].point(ring.field.random_element(rng), 1))
            return A.ideal, scheme_union(ring, [point_ideal(ring, p) for p in pts])
        except ConstructionError:
            continue
    raise RuntimeError("no applicable pair generated")


def random_unsaturated_ideal(seed: int, attempts: int = 20) -> Ideal:
    """A non-saturated ideal: truncations, products and partial generating sets of saturated ideals."""
    rng = random.Random(seed)
    for _ in range(attempts):
        I = _unsaturated_attempt(rng)
        if saturation_degree(I) > 0:
            return I
    raise RuntimeError(f"no non-saturated ideal for seed {seed}")


def _unsaturated_attempt(rng: random.Random) -> Ideal:
    ring = Ring(rng.choice([3, 4]), GF32003)
    field = ring.field
    base_kind = rng.choice(["points", "curve"])
    if base_kind == "points" or ring.nvars == 3:
        I = scheme_union(ring, [point_ideal(ring, _rand_point(ring, rng)) for _ in range(rng.randint(1, 4))])
    else:
        cols = [_rand_point(ring, rng) for _ in range(4)]
        I = rational_normal_curve(ring, 3, [[cols[j][i] for j in range(4)] for i in range(4)]).ideal
    basis = I.gb().basis
    mode = rng.choice(["truncate", "product", "combos"])
    if mode == "truncate":
        k = max(g.degree() for g in basis) + rng.randint(0, 2)
        gens = []
        for g in basis:
            for e in ring.monomials_of_degree(k - g.degree()):
                gens.append(g * ring.monomial(e))
    elif mode == "product":
        lin = [ring.linear_form([field.random_element(rng) for _ in range(ring.nvars)])
               for _ in range(ring.nvars)]
        gens = [g * h for g in basis for h in lin]
    else:
        top = max(g.degree() for g in basis) + 1
        lifted = []
        for g in basis:
            for e in ring.monomials_of_degree(top - g.degree()):
                lifted.append(g * ring.monomial(e))
        k = ring.nvars + rng.randint(0, 2)
        gens = []
        for _ in range(k):
            f = ring.zero()
            for h in lifted:
                f = f + h * field.random_element(rng, nonzero=False)
            gens.append(f)
    return Ideal(ring, gens)


def random_tree(seed: int, max_components: int = 4, max_ambient: int = 8) -> Curve:
    """Seeded linearly normal tree with at most ``max_components`` rational normal curves."""
    rng = random.Random(seed)
    k = rng.randint(1, max_components)
    degrees = []
    budget = max_ambient
    for i in range(k):
        d = rng.randint(1, min(3, budget))
        degrees.append(d)
        budget -= d
        if budget <= 0:
            break
    steps = [TreeStep(degrees[0])]
    for i, d in enumerate(degrees[1:], start=1):
        host = rng.randrange(i)
        steps.append(TreeStep(d, (host, (rng.randint(1, 1000), 1))))
    total = sum(degrees)
    ambient = min(max_ambient, max(2, total) + rng.randint(0, 2))
    return tree(TreeSpec(tuple(steps), ambient))


# -- suites ---------------------------------------------------------------------


def _suite_main(seed: int, count: int):
    yield lambda: check_main_theorem(giaimo_curve(4), seed=seed)
    from .curves import twisted_config
    yield lambda: check_main_theorem(twisted_config().union, seed=seed)
    for k in range(count):
        yield (lambda s=seed * 1000 + k: check_main_theorem(random_connected_curve(s), seed=s))


def _suite_trees(seed: int, count: int):
    for k in range(count):
        yield (lambda s=seed * 1000 + k: check_mincur(random_tree(s), seed=s))
    yield lambda: check_mincur(giaimo_curve(4), seed=seed)


def _suite_caviglia(seed: int, count: int):
    for k in range(count):
        yield (lambda s=seed * 1000 + k: check_caviglia(*random_ideal_pair(s), seed=s))


def _suite_intadd(seed: int, count: int):
    for k in range(count):
        yield (lambda s=seed * 1000 + k: check_intadd(*random_finite_pair(s), seed=s))


def _suite_xi_sum(seed: int, count: int):
    from .curves import twisted_config
    T = twisted_config()
    yield lambda: check_xi_sum(T.C, T.D, seed=seed)
    G = giaimo_curve(4)
    yield lambda: check_xi_sum(G.parts["F"], curve_union([G.parts["G"], G.parts["E"], G.parts["K"]]), seed=seed)


def _suite_structure(seed: int, count: int):
    from .curves import twisted_config
    T = twisted_config()
    yield lambda: check_structure_props(T.C, T.D, seed=seed)
    G = giaimo_curve(4)
    yield lambda: check_structure_props(G.parts["F"], curve_union([G.parts["G"], G.parts["E"], G.parts["K"]]),
                                        seed=seed)


def _suite_construction(seed: int, count: int):
    yield lambda: check_construction(4, seed=seed)


def _suite_p3(seed: int, count: int):
    for C in p3_examples():
        yield (lambda C=C: check_p3_theorem(C, seed=seed))


def _suite_planar(seed: int, count: int):
    for k in range(count):
        yield (lambda s=seed * 1000 + k: check_finite_in_plane(random_planar_scheme(s)[1], seed=s))
    for k in range(count):
        yield (lambda s=seed * 1000 + k: check_hilbert_burch(random_planar_scheme(s)[1], seed=s))
    for k in range(count):
        def curve_case(s=seed * 1000 + k):
            D, Y, d = random_curve_plus_points(s)
            return check_hilbert_burch(ideal_intersect(D, Y), d_curve=d, seed=s)
        yield curve_case
        yield (lambda s=seed * 1000 + k: check_curve_plus_points(*random_curve_plus_points(s)[:2], seed=s))


def _suite_saturation(seed: int, count: int):
    for k in range(count):
        yield (lambda s=seed * 1000 + k: check_saturation_regularity(random_unsaturated_ideal(s), seed=s))


SUITES: dict[str, Callable] = {
    "main": _suite_main,
    "trees": _suite_trees,
    "caviglia": _suite_caviglia,
    "intadd": _suite_intadd,
    "xi_sum": _suite_xi_sum,
    "structure": _suite_structure,
    "construction": _suite_construction,
    "p3": _suite_p3,
    "planar": _suite_planar,
    "saturation": _suite_saturation,
}


def run_suite(name: str, seed: int = 0, count: int = 3) -> list[CheckReport]:
    """Run one suite (or ``"all"``) deterministically; reports in canonical order."""
    names = list(SUITES) if name == "all" else [name]
    out = []
    for nm in names:
        if nm not in SUITES:
            raise ValueError(f"unknown suite {nm!r}; choose from {', '.join(['all', *SUITES])}")
        for job in SUITES[nm](seed, count):
            out.append(job())
    return out


def p3_examples(field: Field = GF32003) -> list[Curve]:
    """Connected curves in ``P^3`` without lines for the space-curve check.

    Two conics meeting in two points (Ξ = 3), a plane quartic with a conic
    through one of its points, and a twisted cubic with a conic in a
    chord plane.
    """
    from .curves import plane_curve
    ring = Ring(4, field)
    x = ring.gens
    # two conics in the planes x3 = 0 and x2 = 0 meeting in two points of x2 = x3 = 0
    C1 = plane_curve(ring, LinearSubspace(ring, [x[3]]), x[0] * x[1] - x[2] ** 2, name="Q1", kind="conic")
    C2 = plane_curve(ring, LinearSubspace(ring, [x[2]]), x[0] * x[1] - x[3] ** 2, name="Q2", kind="conic")
    two_conics = curve_union([C1, C2])
    # plane quartic in x3 = 0 through e0, and a conic in x1 = 0 tangent-free through e0
    quartic = plane_curve(ring, LinearSubspace(ring, [x[3]]),
                          x[1] ** 4 + x[2] ** 4 - x[0] ** 3 * x[1] + x[0] ** 2 * x[2] * x[1] + x[0] ** 3 * x[2] * 2,
                          name="Q4", kind="plane")
    conic = plane_curve(ring, LinearSubspace(ring, [x[1]]), x[0] * x[3] - x[2] ** 2 + x[3] ** 2 * 5 + x[2] * x[3],
                        name="Q2b", kind="conic")
    quartic_conic = curve_union([quartic, conic])
    # twisted cubic and a conic in the plane spanned by a chord and a tangent-free direction
    tc = rational_normal_curve(ring, 3, [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]], name="TC")
    cone = plane_curve(ring, [[1, 0, 0, 0], [0, 0, 0, 1], [0, 1, 1, 0]], "u0*u1 - u2^2 + u0*u2", name="Q3",
                       kind="conic")
    cubic_conic = curve_union([tc, cone])
    return [two_conics, quartic_conic, cubic_conic]


__all__ = [
    "Claim", "CheckReport", "FAIL", "INAPPLICABLE", "PASS", "SUITES", "check_caviglia", "check_construction",
    "check_curve_plus_points", "check_finite_in_plane", "check_hilbert_burch", "check_intadd",
    "check_main_theorem", "check_mincur", "check_p3_theorem", "check_saturation_regularity",
    "check_structure_props", "check_xi_sum", "double_point", "p3_examples", "point_ideal",
    "random_curve_plus_points", "random_finite_pair", "random_ideal_pair", "random_planar_scheme", "random_tree",
    "random_unsaturated_ideal", "recompute_verdict", "run_suite", "scheme_union",
]
