"""Reduced Gröbner bases (Buchberger with Gebauer–Möller pruning) and normal forms.

Internally a polynomial is a list of terms ``(key, E, c)`` sorted by
decreasing ``key``.  ``key`` is the linear order key of the monomial and ``E``
packs the exponents into 16-bit fields, so monomial multiplication is integer
addition for both and divisibility is a single guard-bit test.
"""

from __future__ import annotations

import heapq
from itertools import count
from typing import Iterable, Sequence

from .polyring import GREVLEX, MonomialOrder, Polynomial, Ring

_WIDTH = 16
_MASK = (1 << _WIDTH) - 1


class Engine:
    """Packing and arithmetic helpers for one (ring, order) pair."""

    def __init__(self, ring: Ring, order: MonomialOrder = GREVLEX, grading: Sequence[int] | None = None):
        self.ring = ring
        self.order = order
        self.N = ring.nvars
        self.weights = order.weights(ring.nvars)
        self.guard = sum(1 << (_WIDTH * i + _WIDTH - 1) for i in range(self.N))
        self.p = ring.field.p
        self.field = ring.field
        self.grading = tuple(grading) if grading is not None else (1,) * self.N

    def pack(self, exps: Sequence[int]) -> int:
        E = 0
        for i, a in enumerate(exps):
            E |= a << (_WIDTH * i)
        return E

    def unpack(self, E: int) -> tuple[int, ...]:
        return tuple((E >> (_WIDTH * i)) & _MASK for i in range(self.N))

    def key(self, exps: Sequence[int]) -> int:
        return sum(map(int.__mul__, self.weights, exps))

    def gdeg(self, exps: Sequence[int]) -> int:
        return sum(map(int.__mul__, self.grading, exps))

    def divides(self, A: int, B: int) -> bool:
        return not (B - A) & self.guard

    def lcm(self, A: int, B: int) -> int:
        E = 0
        for i in range(self.N):
            s = _WIDTH * i
            a = (A >> s) & _MASK
            b = (B >> s) & _MASK
            E |= (a if a > b else b) << s
        return E

    def coprime(self, A: int, B: int) -> bool:
        for i in range(self.N):
            s = _WIDTH * i
            if (A >> s) & _MASK and (B >> s) & _MASK:
                return False
        return True

    def to_internal(self, f: Polynomial) -> list[tuple[int, int, object]]:
        if f.ring != self.ring:
            raise ValueError("polynomial from a different ring")
        w = self.weights
        terms = [(sum(map(int.__mul__, w, e)), self.pack(e), c) for e, c in f.coeffs.items()]
        terms.sort(reverse=True, key=lambda t: t[0])
        return terms

    def to_poly(self, terms) -> Polynomial:
        return Polynomial._make(self.ring, {self.unpack(E): c for _, E, c in terms})

    def make_monic(self, terms):
        c0 = terms[0][2]
        if c0 == 1:
            return terms
        inv = self.field.inv(c0)
        p = self.p
        if p is None:
            return [(k, E, c * inv) for k, E, c in terms]
        return [(k, E, c * inv % p) for k, E, c in terms]

    def reduce(self, seed: dict, emap: dict, basis, lead_Es, full: bool = True):
        """Reduce the polynomial held in ``seed``/``emap`` by monic ``basis``.

        ``seed`` maps key -> coefficient (zero entries allowed) and ``emap``
        maps key -> packed exponents.  Returns the remainder as a term list.
        """
        p = self.p
        guard = self.guard
        acc = seed
        heap = [-k for k in acc]
        heapq.heapify(heap)
        rem = []
        nb = len(lead_Es)
        while heap:
            k = -heapq.heappop(heap)
            c = acc.pop(k)
            if not c:
                continue
            E = emap[k]
            j = 0
            while j < nb:
                if not (E - lead_Es[j]) & guard:
                    break
                j += 1
            if j == nb:
                rem.append((k, E, c))
                if not full:
                    rest = [(kk, emap[kk], cc) for kk, cc in acc.items() if cc]
                    rest.sort(reverse=True, key=lambda t: t[0])
                    return rem + rest
                continue
            g = basis[j]
            dk = k - g[0][0]
            dE = E - g[0][1]
            if p is None:
                for gk, gE, gc in g[1:]:
                    nk = gk + dk
                    v = acc.get(nk)
                    if v is None:
                        acc[nk] = -c * gc
                        emap[nk] = gE + dE
                        heapq.heappush(heap, -nk)
                    else:
                        acc[nk] = v - c * gc
            else:
                for gk, gE, gc in g[1:]:
                    nk = gk + dk
                    v = acc.get(nk)
                    if v is None:
                        acc[nk] = -c * gc % p
                        emap[nk] = gE + dE
                        heapq.heappush(heap, -nk)
                    else:
                        acc[nk] = (v - c * gc) % p
        return rem

    def nf(self, f_terms, basis, lead_Es, full: bool = True):
        seed = {k: c for k, _, c in f_terms}
        emap = {k: E for k, E, _ in f_terms}
        return self.reduce(seed, emap, basis, lead_Es, full)

    def spoly_seed(self, gi, gj, L: int, Lkey: int):
        """Seed dict for the S-polynomial of monic ``gi``, ``gj`` (lead cancelled)."""
        p = self.p
        acc: dict = {}
        emap: dict = {}
        dk = Lkey - gi[0][0]
        dE = L - gi[0][1]
        for k, E, c in gi[1:]:
            nk = k + dk
            acc[nk] = c
            emap[nk] = E + dE
        dk = Lkey - gj[0][0]
        dE = L - gj[0][1]
        for k, E, c in gj[1:]:
            nk = k + dk
            v = acc.get(nk)
            if v is None:
                acc[nk] = -c if p is None else -c % p
                emap[nk] = E + dE
            else:
                acc[nk] = v - c if p is None else (v - c) % p
        return acc, emap

    def buchberger(self, gens: Iterable[list]) -> list[list]:
        """Reduced Gröbner basis of internal polynomials, sorted by increasing lead."""
        gens = [g for g in gens if g]
        if not gens:
            return []
        G: list = []
        leads: list[int] = []
        lead_keys: list[int] = []
        sugar: list[int] = []
        active: list[bool] = []
        pairs: dict[tuple[int, int], tuple] = {}
        heap: list = []
        tick = count()

        for f in gens:
            s = max(self.gdeg(self.unpack(E)) for _, E, _ in f)
            heapq.heappush(heap, (s, f[0][0], next(tick), "gen", f))

        def act_basis():
            idx = [i for i in range(len(G)) if active[i]]
            return [G[i] for i in idx], [leads[i] for i in idx]

        cur_basis, cur_leads = [], []

        def update(h: int):
            nonlocal cur_basis, cur_leads
            Eh = leads[h]
            cand = [i for i in range(h) if active[i]]
            lcms = {i: self.lcm(leads[i], Eh) for i in cand}
            # Gebauer–Möller: criterion on new pairs
            keep = []
            for idx, i in enumerate(cand):
                Li = lcms[i]
                if self.coprime(leads[i], Eh):
                    keep.append(i)
                    continue
                dominated = False
                for j in cand[idx + 1:]:
                    if self.divides(lcms[j], Li):
                        dominated = True
                        break
                if not dominated:
                    for j in keep:
                        if self.divides(lcms[j], Li):
                            dominated = True
                            break
                if not dominated:
                    keep.append(i)
            new_pairs = [i for i in keep if not self.coprime(leads[i], Eh)]
            # chain criterion on old pairs
            for (i, j) in list(pairs):
                L = pairs[(i, j)][1]
                if self.divides(Eh, L) and self.lcm(leads[i], Eh) != L and self.lcm(leads[j], Eh) != L:
                    del pairs[(i, j)]
            for i in new_pairs:
                L = lcms[i]
                ex = self.unpack(L)
                dL = self.gdeg(ex)
                s = max(sugar[i] + dL - self.gdeg(self.unpack(leads[i])),
                        sugar[h] + dL - self.gdeg(self.unpack(Eh)))
                Lkey = self.key(ex)
                pairs[(i, h)] = (s, L, Lkey)
                heapq.heappush(heap, (s, Lkey, next(tick), "pair", (i, h)))
            for i in range(h):
                if active[i] and self.divides(Eh, leads[i]):
                    active[i] = False
            cur_basis, cur_leads = act_basis()

        while heap:
            s, _, _, kind, data = heapq.heappop(heap)
            if kind == "gen":
                r = self.nf(data, cur_basis, cur_leads)
            else:
                if data not in pairs:
                    continue
                i, j = data
                _, L, Lkey = pairs.pop(data)
                acc, emap = self.spoly_seed(G[i], G[j], L, Lkey)
                r = self.reduce(acc, emap, cur_basis, cur_leads)
            if not r:
                continue
            r = self.make_monic(r)
            if r[0][1] == 0:
                return [[(0, 0, self.field(1))]]
            G.append(r)
            leads.append(r[0][1])
            lead_keys.append(r[0][0])
            sugar.append(max(s, self.gdeg(self.unpack(r[0][1]))))
            active.append(True)
            update(len(G) - 1)

        return self.interreduce([G[i] for i in range(len(G)) if active[i]])

    def interreduce(self, basis: list[list]) -> list[list]:
        """Minimalize, tail-reduce and sort a Gröbner basis."""
        basis = [b for b in basis if b]
        basis.sort(key=lambda g: g[0][0])
        minimal = []
        for g in basis:
            if not any(self.divides(h[0][1], g[0][1]) for h in minimal):
                minimal = [h for h in minimal if not self.divides(g[0][1], h[0][1])]
                minimal.append(g)
        out = []
        for idx, g in enumerate(minimal):
            others = minimal[:idx] + minimal[idx + 1:]
            olead = [h[0][1] for h in others]
            tail = self.nf(g[1:], others, olead) if len(g) > 1 else []
            out.append(self.make_monic([g[0]] + tail))
        out.sort(key=lambda g: g[0][0])
        return out


class ReducedGB:
    """A reduced Gröbner basis: monic, tail-reduced, sorted by increasing leading term."""

    def __init__(self, ring: Ring, order: MonomialOrder, internal: list[list], engine: Engine | None = None):
        self.ring = ring
        self.order = order
        self.engine = engine or Engine(ring, order)
        self._internal = internal
        self.basis = [self.engine.to_poly(g) for g in internal]
        self._leads = [g[0][1] for g in internal]

    def __len__(self):
        return len(self.basis)

    def __iter__(self):
        return iter(self.basis)

    def __repr__(self):
        return f"ReducedGB({[b.render() for b in self.basis]})"

    @property
    def is_zero_ideal(self) -> bool:
        return not self.basis

    @property
    def is_unit(self) -> bool:
        return len(self.basis) == 1 and self.basis[0].is_constant()

    def lead_exponents(self) -> list[tuple[int, ...]]:
        return [self.engine.unpack(E) for E in self._leads]

    def normal_form(self, f: Polynomial) -> Polynomial:
        if f.ring != self.ring:
            raise ValueError("polynomial from a different ring")
        if not f:
            return f
        r = self.engine.nf(self.engine.to_internal(f), self._internal, self._leads)
        return self.engine.to_poly(r)

    def contains(self, f: Polynomial) -> bool:
        return self.normal_form(f).is_zero()

    def render(self) -> str:
        return "\n".join(b.render(self.order) for b in self.basis)


def buchberger(gens: Sequence[Polynomial], order: MonomialOrder = GREVLEX,
               grading: Sequence[int] | None = None) -> ReducedGB:
    """Reduced Gröbner basis of ``<gens>``.

    An empty (or all-zero) generator list gives the zero ideal: a basis with
    no elements, not an error.
    """
    gens = list(gens)
    if not gens:
        raise ValueError("need at least one generator to know the ring; pass [ring.zero()] for the zero ideal")
    ring = gens[0].ring
    for g in gens:
        if g.ring != ring:
            raise ValueError("generators from different rings")
    eng = Engine(ring, order, grading)
    internal = [eng.to_internal(g) for g in gens if g]
    return ReducedGB(ring, order, eng.buchberger(internal), eng)


def normal_form(f: Polynomial, G: ReducedGB) -> Polynomial:
    return G.normal_form(f)
