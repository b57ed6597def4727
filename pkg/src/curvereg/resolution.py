"""Graded free resolutions, Betti tables and Castelnuovo–Mumford regularity.

A (usually non-minimal) free resolution of ``S/I`` is built from a grevlex
Gröbner basis by Schreyer's construction: at each step the S-pairs of the
previous basis, reduced to zero, are a Gröbner basis of the syzygies for the
induced order.  Elements with equal lead component are kept in
lexicographically decreasing order of lead monomial, which bounds the length
by the number of variables.

Graded Betti numbers come from the ranks of the constant parts of the
differentials, so the minimal resolution is only materialized on request.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field as dc_field
from typing import Sequence

from .groebner import Engine
from .ideals import Ideal
from .polyring import GREVLEX, Field, Polynomial, Ring

_R = 1 << 24  # module keys are K(total monomial) * _R + rank


@dataclass
class _Level:
    """Basis elements of one free module of the frame, with their images."""

    terms: list            # per element: [(key, E, comp, coef)] in the previous module, key descending
    lead_key: list[int]
    lead_E: list[int]
    lead_comp: list[int]
    lead_coef: list
    degree: list[int]
    rank: list[int]

    def __len__(self):
        return len(self.terms)


def _sparse_rank(rows: list[dict], field: Field) -> int:
    """Rank of a sparse matrix given as ``{col: coef}`` rows."""
    norm = field.normalizer()
    pivots: dict[int, dict] = {}
    r = 0
    for row in rows:
        row = {c: v for c, v in row.items() if v}
        while row:
            c = min(row)
            prow = pivots.get(c)
            if prow is None:
                inv = field.inv(row[c])
                pivots[c] = {k: norm(v * inv) for k, v in row.items()}
                r += 1
                break
            f = row[c]
            for k, v in prow.items():
                nv = norm(row.get(k, 0) - f * v)
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
    return r


class SchreyerResolution:
    """Schreyer frame resolution of ``S/I`` (not necessarily minimal)."""

    def __init__(self, I: Ideal):
        if I.is_unit():
            raise ValueError("the unit ideal has no resolution of S/I")
        if not I.is_homogeneous:
            raise ValueError("resolutions need a homogeneous ideal")
        self.ideal = I
        self.ring: Ring = I.ring
        self.field = self.ring.field
        self.eng = Engine(self.ring, GREVLEX)
        self.levels: list[_Level] = []
        self._build()

    # -- construction -----------------------------------------------------
    def _K(self, E: int) -> int:
        return self.eng.key(self.eng.unpack(E))

    def _lexdesc(self, E: int):
        return tuple(-a for a in self.eng.unpack(E))

    def _build(self):
        eng = self.eng
        F0 = _Level([[]], [0], [0], [0], [1], [0], [0])
        self.levels.append(F0)
        if self.ideal.is_zero():
            return
        G = self.ideal.gb()._internal
        elems = []
        for g in G:
            elems.append([(k * _R, E, 0, c) for k, E, c in g])
        elems.sort(key=lambda t: self._lexdesc(t[0][1]))
        self.levels.append(self._make_level(elems, self.levels[0]))
        while True:
            nxt = self._syzygies(self.levels[-1])
            if not nxt:
                break
            self.levels.append(self._make_level(nxt, self.levels[-1]))

    def _make_level(self, elems: list, prev: _Level) -> _Level:
        eng = self.eng
        lead_key = [t[0][0] for t in elems]
        lead_E = [t[0][1] for t in elems]
        lead_comp = [t[0][2] for t in elems]
        lead_coef = [t[0][3] for t in elems]
        degree = [sum(eng.unpack(E)) + prev.degree[p] for E, p in zip(lead_E, lead_comp)]
        order = sorted(range(len(elems)), key=lambda i: (prev.rank[lead_comp[i]], -i))
        rank = [0] * len(elems)
        for pos, i in enumerate(order):
            rank[i] = pos
        return _Level(elems, lead_key, lead_E, lead_comp, lead_coef, degree, rank)

    def _syzygies(self, lev: _Level) -> list:
        eng = self.eng
        field = self.field
        norm = field.normalizer()
        guard = eng.guard
        groups: dict[int, list[int]] = {}
        for i, p in enumerate(lev.lead_comp):
            groups.setdefault(p, []).append(i)
        reducers = {p: [(lev.lead_E[i], i) for i in idx] for p, idx in groups.items()}
        ktot = [k // _R for k in lev.lead_key]
        out = []
        for p, idx in groups.items():
            for a, i in enumerate(idx):
                cands = []
                mi = lev.lead_E[i]
                for j in idx[a + 1:]:
                    L = eng.lcm(mi, lev.lead_E[j])
                    cands.append((sum(eng.unpack(L - mi)), L - mi, L, j))
                cands.sort(key=lambda t: t[0])
                kept = []
                for _, q, L, j in cands:
                    if any(not (q - k) & guard for k, _, _ in kept):
                        continue
                    kept.append((q, L, j))
                for q, L, j in kept:
                    out.append(self._reduce_pair(lev, i, j, q, L, reducers, ktot, norm, guard))
        out.sort(key=lambda t: (t[0][2], self._lexdesc(t[0][1])))
        return out

    def _reduce_pair(self, lev: _Level, i: int, j: int, q: int, L: int, reducers, ktot, norm, guard):
        """Syzygy with lead ``x^q e_i`` from the S-pair of elements ``i`` and ``j``."""
        field = self.field
        fi, fj = lev.terms[i], lev.terms[j]
        q2 = L - lev.lead_E[j]
        dki = self._K(q) * _R
        dkj = self._K(q2) * _R
        ratio = norm(lev.lead_coef[i] * field.inv(lev.lead_coef[j]))
        acc: dict = {}
        emap: dict = {}
        for k, E, comp, cf in fi[1:]:
            acc[k + dki] = cf
            emap[k + dki] = (E + q, comp)
        for k, E, comp, cf in fj[1:]:
            nk = k + dkj
            v = norm(acc.get(nk, 0) - ratio * cf)
            acc[nk] = v
            if nk not in emap:
                emap[nk] = (E + q2, comp)
        syz: dict = {}
        syz_E: dict = {}

        def add_syz(d: int, Kd: int, l: int, c):
            sk = (Kd + ktot[l]) * _R + lev.rank[l]
            syz[sk] = norm(syz.get(sk, 0) + c)
            syz_E[sk] = (d, l)

        add_syz(q, dki // _R, i, field(1))
        add_syz(q2, dkj // _R, j, norm(-ratio))
        heap = [-k for k in acc]
        heapq.heapify(heap)
        while heap:
            k = -heapq.heappop(heap)
            c = acc.pop(k, 0)
            if not c:
                continue
            E, comp = emap[k]
            for lE, l in reducers.get(comp, ()):
                if not (E - lE) & guard:
                    break
            else:
                raise ArithmeticError("S-pair did not reduce to zero; frame is inconsistent")
            f = lev.terms[l]
            factor = norm(c * field.inv(lev.lead_coef[l]))
            dk = k - lev.lead_key[l]
            dE = E - lE
            add_syz(dE, dk // _R, l, norm(-factor))
            for gk, gE, gcomp, gc in f[1:]:
                nk = gk + dk
                v = acc.get(nk)
                if v is None:
                    acc[nk] = norm(-factor * gc)
                    emap[nk] = (gE + dE, gcomp)
                    heapq.heappush(heap, -nk)
                else:
                    acc[nk] = norm(v - factor * gc)
        terms = [(k, syz_E[k][0], syz_E[k][1], c) for k, c in syz.items() if c]
        terms.sort(key=lambda t: -t[0])
        return terms

    # -- graded data ------------------------------------------------------
    @property
    def length(self) -> int:
        return len(self.levels) - 1

    def ranks(self) -> list[list[int]]:
        """Module ranks by homological degree (``ranks()[k]`` lists generator degrees)."""
        return [list(L.degree) for L in self.levels]

    def constant_rank(self, k: int, j: int) -> int:
        """Rank of the degree-``j`` constant part of the map ``F_k -> F_{k-1}``."""
        if k <= 0 or k >= len(self.levels):
            return 0
        lev = self.levels[k]
        prev = self.levels[k - 1]
        rows = []
        for s in range(len(lev)):
            if lev.degree[s] != j:
                continue
            row = {comp: c for _, E, comp, c in lev.terms[s] if E == 0 and prev.degree[comp] == j}
            if row:
                rows.append(row)
        return _sparse_rank(rows, self.field)

    def betti(self) -> "BettiTable":
        out: dict[tuple[int, int], int] = {}
        for k, lev in enumerate(self.levels):
            for j in sorted(set(lev.degree)):
                n = lev.degree.count(j)
                b = n - self.constant_rank(k, j) - self.constant_rank(k + 1, j)
                if b:
                    out[(k, j)] = b
        return BettiTable(out)

    def matrices(self) -> list[list[dict]]:
        """Differentials as sparse column lists: ``mats[k][col] = {row: Polynomial}``."""
        mats = []
        for k in range(1, len(self.levels)):
            cols = []
            for terms in self.levels[k].terms:
                col: dict = {}
                for _, E, comp, c in terms:
                    col.setdefault(comp, {})[self.eng.unpack(E)] = c
                cols.append({r: Polynomial(self.ring, t) for r, t in col.items()})
            mats.append(cols)
        return mats


@dataclass(frozen=True)
class BettiTable:
    """Graded Betti numbers ``beta[(i, j)]`` of a module (zero entries omitted)."""

    entries: dict = dc_field(default_factory=dict)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        return self.entries.get(ij, 0)

    def __eq__(self, other):
        if not isinstance(other, BettiTable):
            return NotImplemented
        return {k: v for k, v in self.entries.items() if v} == {k: v for k, v in other.entries.items() if v}

    def __hash__(self):
        return hash(frozenset(self.entries.items()))

    @property
    def length(self) -> int:
        return max((i for (i, _), v in self.entries.items() if v), default=0)

    def totals(self) -> list[int]:
        return [sum(v for (i, _), v in self.entries.items() if i == k) for k in range(self.length + 1)]

    def regularity(self) -> int:
        return max(j - i for (i, j), v in self.entries.items() if v)

    def degrees(self, i: int) -> list[int]:
        """Twists of the ``i``-th module, with multiplicity, descending."""
        out = []
        for (a, j), v in self.entries.items():
            if a == i:
                out += [j] * v
        return sorted(out, reverse=True)

    def numerator(self) -> list[int]:
        """``sum (-1)^i beta_{i,j} t^j`` as ascending integer coefficients."""
        top = max((j for (_, j) in self.entries), default=0)
        out = [0] * (top + 1)
        for (i, j), v in self.entries.items():
            out[j] += (-1) ** i * v
        while out and out[-1] == 0:
            out.pop()
        return out

    def shifted(self) -> "BettiTable":
        """Betti table of ``I`` from that of ``S/I`` (drop ``F_0``, shift homological index)."""
        return BettiTable({(i - 1, j): v for (i, j), v in self.entries.items() if i >= 1})

    def render(self) -> str:
        """Macaulay-style grid: columns are ``i``, rows are ``j - i``."""
        if not self.entries:
            return "total:"
        cols = range(self.length + 1)
        rows = sorted({j - i for (i, j) in self.entries})
        rows = range(min(rows), max(rows) + 1)
        cells = {(r, i): str(self[(i, i + r)]) if self[(i, i + r)] else "." for r in rows for i in cols}
        tot = [str(t) for t in self.totals()]
        width = max([len(c) for c in cells.values()] + [len(t) for t in tot] + [len(str(i)) for i in cols])
        label = max(len("total:"), max(len(f"{r}:") for r in rows))
        lines = [" " * label + " " + " ".join(str(i).rjust(width) for i in cols)]
        lines.append("total:".rjust(label) + " " + " ".join(t.rjust(width) for t in tot))
        for r in rows:
            lines.append(f"{r}:".rjust(label) + " " + " ".join(cells[(r, i)].rjust(width) for i in cols))
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {f"{i},{j}": v for (i, j), v in sorted(self.entries.items()) if v}

    def __str__(self):
        return self.render()


def betti_numbers(I: Ideal) -> BettiTable:
    """Graded Betti numbers of ``S/I``."""
    cache = getattr(I, "_betti", None)
    if cache is None:
        cache = SchreyerResolution(I).betti()
        I._betti = cache
    return cache


class Resolution:
    """A graded free resolution of ``S/I`` (or of ``I``) with explicit matrices.

    ``degrees[k]`` lists the generator degrees of ``F_k`` and ``maps[k - 1]``
    holds the differential ``F_k -> F_{k-1}`` as columns ``{row: Polynomial}``.
    """

    def __init__(self, ring: Ring, degrees: list[list[int]], maps: list[list[dict]], module: str = "quotient"):
        self.ring = ring
        self.degrees = degrees
        self.maps = maps
        self.module = module

    @property
    def length(self) -> int:
        return len(self.degrees) - 1

    def betti(self) -> BettiTable:
        out: dict = {}
        for k, degs in enumerate(self.degrees):
            for d in degs:
                out[(k, d)] = out.get((k, d), 0) + 1
        return BettiTable(out)

    def matrix(self, k: int) -> list[list[Polynomial]]:
        """Dense form of the differential ``F_k -> F_{k-1}`` (rows index ``F_{k-1}``)."""
        cols = self.maps[k - 1]
        nrows = len(self.degrees[k - 1])
        zero = self.ring.zero()
        return [[cols[c].get(r, zero) for c in range(len(cols))] for r in range(nrows)]

    def is_complex(self) -> bool:
        """Consecutive differentials compose to zero."""
        for k in range(2, len(self.degrees)):
            A, B = self.maps[k - 2], self.maps[k - 1]
            for col in B:
                acc: dict = {}
                for mid, entry in col.items():
                    for row, a in A[mid].items():
                        acc[row] = acc.get(row, self.ring.zero()) + a * entry
                if any(v for v in acc.values()):
                    return False
        return True

    def is_minimal(self) -> bool:
        return all(not (e.is_constant() and e) for cols in self.maps for col in cols for e in col.values())

    def as_ideal_resolution(self) -> "Resolution":
        if self.module == "ideal":
            return self
        return Resolution(self.ring, self.degrees[1:], self.maps[1:], "ideal")


def _prune(ring: Ring, degrees: list[list[int]], maps: list[list[dict]]):
    """Remove unit entries, from the last differential backwards."""
    field = ring.field
    alive_rows = [set(range(len(d))) for d in degrees]
    mats = [{c: dict(col) for c, col in enumerate(cols)} for cols in maps]
    for k in range(len(mats), 0, -1):
        A = mats[k - 1]
        while True:
            unit = None
            for tau in sorted(A):
                for sigma, e in A[tau].items():
                    if e and e.is_constant():
                        unit = (sigma, tau, e.constant_coefficient())
                        break
                if unit:
                    break
            if unit is None:
                break
            sigma, tau, u = unit
            inv = field.inv(u)
            ctau = A[tau]
            for l, col in A.items():
                if l == tau:
                    continue
                a = col.get(sigma)
                if not a:
                    continue
                factor = a * inv
                for r, e in ctau.items():
                    v = col.get(r, ring.zero()) - factor * e
                    if v:
                        col[r] = v
                    else:
                        col.pop(r, None)
            del A[tau]
            for col in A.values():
                col.pop(sigma, None)
            alive_rows[k].discard(tau)
            alive_rows[k - 1].discard(sigma)
            if k >= 2:
                mats[k - 2].pop(sigma, None)
            if k < len(mats):
                for col in mats[k].values():
                    col.pop(tau, None)
    # canonical renumbering: by degree, then original position
    new_degrees, index = [], []
    for k, alive in enumerate(alive_rows):
        order = sorted(alive, key=lambda i: (degrees[k][i], i))
        index.append({old: new for new, old in enumerate(order)})
        new_degrees.append([degrees[k][i] for i in order])
    new_maps = []
    for k in range(1, len(new_degrees)):
        A = mats[k - 1]
        cols = [None] * len(new_degrees[k])
        for old, col in A.items():
            cols[index[k][old]] = {index[k - 1][r]: e for r, e in col.items() if e}
        new_maps.append(cols)
    while len(new_degrees) > 1 and not new_degrees[-1]:
        new_degrees.pop()
        new_maps.pop()
    return new_degrees, new_maps


def min_free_resolution(I: Ideal, of: str = "quotient") -> Resolution:
    """Minimal graded free resolution of ``S/I`` (``of="quotient"``) or of ``I`` (``of="ideal"``)."""
    if of not in ("quotient", "ideal"):
        raise ValueError("of must be 'quotient' or 'ideal'")
    frame = SchreyerResolution(I)
    degrees, maps = _prune(I.ring, frame.ranks(), frame.matrices())
    res = Resolution(I.ring, degrees, maps)
    return res if of == "quotient" else res.as_ideal_resolution()


def betti_table(R: Resolution) -> BettiTable:
    return R.betti()


def _check_proper_nonzero(I: Ideal):
    if I.is_zero():
        raise ValueError("regularity of the zero ideal is not defined here")
    if I.is_unit():
        raise ValueError("regularity of the unit ideal is not defined")


def regularity_of_quotient(I: Ideal) -> int:
    """``reg(S/I)``."""
    _check_proper_nonzero(I)
    return betti_numbers(I).regularity()


def regularity(I: Ideal) -> int:
    """``reg(I) = reg(S/I) + 1``."""
    return regularity_of_quotient(I) + 1


def regularity_crosscheck(I: Ideal) -> int:
    """``max(reg(I^sat), sat(I))``, with the unit saturation contributing nothing."""
    from .ideals import saturate
    from .invariants import saturation_degree

    _check_proper_nonzero(I)
    S = saturate(I)
    sat = saturation_degree(I)
    if S.is_unit():
        return sat
    return max(regularity(S), sat)


@dataclass(frozen=True)
class DiagonalDegrees:
    """Degrees on the principal diagonals of a Hilbert–Burch matrix."""

    a: tuple[int, ...]
    b: tuple[int, ...]
    e: tuple[int, ...]
    f: tuple[int, ...]
    d_curve: int
    failures: tuple[str, ...] = ()

    @property
    def finite_degree(self) -> int:
        """``sum_{i <= j} e_i f_j``: degree of the finite part."""
        t = len(self.e)
        return sum(self.e[i] * self.f[j] for i in range(t) for j in range(i, t))

    @property
    def regularity(self) -> int:
        """``reg`` of the subscheme: ``b_1 - 1``."""
        return self.b[0] - 1

    @property
    def ok(self) -> bool:
        return not self.failures


def hilbert_burch_degrees(B: BettiTable, d_curve: int = 0) -> DiagonalDegrees:
    """Diagonal degrees ``e``, ``f`` of a length-two resolution of ``S/I``.

    ``B`` is the Betti table of ``S/I`` for a codimension-two Cohen–Macaulay
    subscheme of the plane; ``d_curve`` is the degree of its curve part
    (zero for finite schemes).  All the standard identities are checked and
    failures are listed in the result.
    """
    if B.length != 2 or B[(0, 0)] != 1 or sum(v for (i, _), v in B.entries.items() if i == 0) != 1:
        raise ValueError("Betti table is not of Hilbert–Burch shape")
    a = tuple(B.degrees(1))
    b = tuple(B.degrees(2))
    t = len(b)
    if len(a) != t + 1:
        raise ValueError("Hilbert–Burch shape needs t+1 generators and t relations")
    e = tuple(b[i] - a[i] for i in range(t))
    f = tuple(b[i] - a[i + 1] for i in range(t))
    fails = []
    for i in range(t):
        if e[i] < 1:
            fails.append(f"e_{i + 1} = {e[i]} < 1")
        if f[i] < 1:
            fails.append(f"f_{i + 1} = {f[i]} < 1")
        if f[i] < e[i]:
            fails.append(f"f_{i + 1} < e_{i + 1}")
        if i + 1 < t and f[i] < e[i + 1]:
            fails.append(f"f_{i + 1} < e_{i + 2}")
    for i in range(t + 1):
        expect = sum(e[:i]) + sum(f[i:]) + d_curve
        if a[i] != expect:
            fails.append(f"a_{i + 1} = {a[i]} but diagonal sum gives {expect}")
    if sum(b) + d_curve != sum(a):
        fails.append("sum of relation degrees does not match generator degrees")
    # Hilbert polynomial identity, read from the Betti numerator over (1 - t)^3
    dd = DiagonalDegrees(a, b, e, f, d_curve)
    num = B.numerator()
    for n in range(max(b) + 1, max(b) + 4):
        hf = sum(c * (n - k + 2) * (n - k + 1) // 2 for k, c in enumerate(num) if n - k >= 0)
        expect = d_curve * n + 1 - (d_curve - 1) * (d_curve - 2) // 2 + dd.finite_degree
        if hf != expect:
            fails.append(f"Hilbert function {hf} at {n} differs from {expect}")
            break
    return DiagonalDegrees(a, b, e, f, d_curve, tuple(fails))


def _linear_in_span(forms: Sequence[Polynomial], field: Field):
    """Coefficient rows of linear forms (``None`` if some form is not linear)."""
    rows = []
    for f in forms:
        if f and (f.degree() != 1 or not f.is_homogeneous()):
            return None
        row = [field(0)] * f.ring.nvars
        for e, c in f.coeffs.items():
            row[e.index(1)] = c
        rows.append(row)
    return rows


def _line_section_degree(I: Ideal, m: Polynomial) -> int | None:
    from .ideals import ideal_sum, saturate
    from .invariants import dim_deg

    J = saturate(ideal_sum(I, Ideal(I.ring, [m])))
    dim, deg = dim_deg(J)
    return deg if dim == 0 else None


def find_extremal_line_planar(I: Ideal) -> Polynomial | None:
    """A line meeting a planar scheme in the length the regularity predicts.

    ``I`` is the saturated ideal of a finite scheme ``X`` in the plane, or of a
    curve union a finite scheme.  For finite ``X`` of degree ``d``: if
    ``reg = d`` the line containing ``X`` is returned; if ``reg = d - 1`` and
    ``d != 4`` a line with ``deg(line ∩ X) = d - 1`` is returned.  For a curve
    union a finite scheme with a two-generator resolution the line read off
    the syzygy is returned.  Otherwise ``None``.
    """
    from .invariants import dim_deg

    ring = I.ring
    if ring.nvars != 3:
        raise ValueError("expected an ideal in three variables")
    if I.is_unit() or I.is_zero():
        raise ValueError("expected a proper nonzero ideal")
    dim, d = dim_deg(I)
    res = min_free_resolution(I)
    gens = [res.maps[0][c][0] for c in range(len(res.degrees[1]))]
    reg = res.betti().regularity() + 1
    field = ring.field

    def confirm(m: Polynomial | None, want: int) -> Polynomial | None:
        if m is None or not m:
            return None
        if _line_section_degree(I, m) == want:
            return m.monic()
        return None

    if dim == 0:
        if reg == d:
            lin = [g for g in gens if g.degree() == 1]
            return confirm(lin[0], d) if lin else None
        if reg != d - 1 or d == 4 or d < 3:
            return None
        if d == 3:
            return confirm(_three_point_line(res, gens, field), 2)
        # two quadrics sharing a linear factor: read it off the linear syzygy
        quad = [i for i, g in enumerate(gens) if g.degree() == 2]
        if len(quad) != 2 or res.length < 2:
            return None
        for col in res.maps[1]:
            entries = [col.get(i) for i in quad]
            if all(e is not None and e.degree() == 1 for e in entries):
                l2 = entries[0]
                try:
                    m = gens[quad[1]].divide_exact(l2)
                except ValueError:
                    try:
                        m = gens[quad[0]].divide_exact(entries[1])
                    except ValueError:
                        continue
                return confirm(m, d - 1)
        return None
    if dim == 1:
        if len(gens) != 2 or res.length != 2 or len(res.degrees[2]) != 1:
            return None
        # generators g*m and g*h with syzygy h*(g*m) - m*(g*h): the entries are the candidate lines
        col = res.maps[1][0]
        for cand in sorted(col.values(), key=lambda e: e.degree()):
            if cand.degree() == 1:
                found = confirm(cand, reg)
                if found is not None:
                    return found
        return None
    return None


def _det3(M) -> object:
    return (M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1])
            - M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0])
            + M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]))


def _binary_cubic_roots(A, B, field: Field) -> list[tuple]:
    """Points ``(lam, mu)`` of the projective line with ``det(lam*A + mu*B) = 0``."""
    def det_at(lam, mu):
        return field(_det3([[lam * a + mu * b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]))

    out = []
    if det_at(1, 0) == 0:
        out.append((1, 0))
    if field.p is not None:
        out += [(x, 1) for x in range(field.p) if det_at(x, 1) == 0]
        return out
    from sympy import Poly, Rational, roots, symbols

    x = symbols("x")
    # interpolate det(x, 1), a polynomial of degree at most 3
    pts = [(k, det_at(k, 1)) for k in range(4)]
    from sympy import interpolate
    poly = Poly(interpolate([(Rational(k), Rational(v.numerator, v.denominator)) for k, v in pts], x), x)
    if poly.is_zero:
        return out
    for r in roots(poly, filter="Q"):
        out.append((field(r.p) / r.q, 1))
    return out


def _three_point_line(res: Resolution, gens: list[Polynomial], field: Field) -> Polynomial | None:
    """Line through a length-two subscheme of a non-collinear length-three scheme.

    Such a line ``l`` gives a linear syzygy whose entries span only two
    dimensions, ``sum (a_k v1 + b_k v2) g_k = 0``; then ``sum b_k g_k = l * v1``.
    """
    from .linalg import rank, solve_in_span

    if len(gens) != 3 or res.length != 2 or len(res.maps[1]) != 2:
        return None
    s1, s2 = res.maps[1]
    ring = gens[0].ring
    zero = ring.zero()
    A = _linear_in_span([s1.get(i, zero) for i in range(3)], field)
    B = _linear_in_span([s2.get(i, zero) for i in range(3)], field)
    if A is None or B is None:
        return None
    norm = field.normalizer()
    for lam, mu in _binary_cubic_roots(A, B, field):
        rows = [[norm(lam * a + mu * b) for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]
        basis: list = []
        for r in rows:
            if any(r) and rank(basis + [r], field) > len(basis):
                basis.append(r)
        if len(basis) != 2:
            continue
        combo = zero
        for k, r in enumerate(rows):
            sol = solve_in_span(basis, r, field)
            combo = combo + gens[k] * sol[1]
        try:
            return combo.divide_exact(ring.linear_form(basis[0]))
        except (ValueError, ZeroDivisionError):
            continue
    return None
