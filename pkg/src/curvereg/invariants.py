"""Hilbert series, Hilbert function and polynomial, dimension, degree and saturation degree.

The Hilbert series of ``S/I`` is read off the lead-term ideal of a grevlex
Gröbner basis.  The numerator ``Q(t)`` of ``Q(t) / (1 - t)^N`` comes from the
pivot recursion ``N(M) = N(M + (p)) + t^deg(p) * N(M : p)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Sequence

from .ideals import Ideal, saturate

Poly1 = list  # univariate integer polynomial, ascending coefficients


def _trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _sub(a: list, b: list) -> list:
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


def _add(a: list, b: list) -> list:
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def _mul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _shift(a: list, k: int) -> list:
    return [0] * k + a if a else []


def _minimalize(gens: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    gens = sorted(set(gens), key=sum)
    out: list[tuple[int, ...]] = []
    for g in gens:
        if not any(all(a <= b for a, b in zip(h, g)) for h in out):
            out.append(g)
    return out


def monomial_numerator(gens: Sequence[tuple[int, ...]]) -> list[int]:
    """Numerator of the Hilbert series of ``S / (monomials)`` over ``(1 - t)^N``."""
    return _numerator(_minimalize(list(gens)))


def _numerator(M: list[tuple[int, ...]]) -> list[int]:
    if not M:
        return [1]
    if any(sum(g) == 0 for g in M):
        return []
    # pairwise coprime generators: a product of (1 - t^d)
    support = [frozenset(i for i, a in enumerate(g) if a) for g in M]
    seen: set = set()
    coprime = True
    for s in support:
        if seen & s:
            coprime = False
            break
        seen |= s
    if coprime:
        out = [1]
        for g in M:
            d = sum(g)
            out = _mul(out, [1] + [0] * (d - 1) + [-1])
        return out
    # pivot on the variable occurring in most generators
    n = len(M[0])
    counts = [sum(1 for g in M if g[i]) for i in range(n)]
    i = max(range(n), key=lambda j: counts[j])
    exps = sorted(g[i] for g in M if g[i])
    a = exps[(len(exps) - 1) // 2]
    pivot = tuple(a if j == i else 0 for j in range(n))
    plus = _minimalize(M + [pivot])
    colon = _minimalize([tuple(max(e - p, 0) for e, p in zip(g, pivot)) for g in M])
    return _add(_numerator(plus), _shift(_numerator(colon), a))


@dataclass(frozen=True)
class HilbertData:
    """Hilbert series ``Q(t) / (1 - t)^nvars = P(t) / (1 - t)^krull_dim`` of ``S/I``."""

    numerator: tuple[int, ...]
    nvars: int
    reduced: tuple[int, ...]
    krull_dim: int
    degree: int
    hilbert_polynomial: tuple[Fraction, ...]

    def hilbert_function(self, d: int) -> int:
        if d < 0:
            return 0
        N = self.nvars
        return sum(q * comb(d - k + N - 1, N - 1) for k, q in enumerate(self.numerator) if d - k >= 0)

    def polynomial_value(self, d: int) -> Fraction:
        return sum((c * d ** i for i, c in enumerate(self.hilbert_polynomial)), Fraction(0))

    @property
    def regularity_bound(self) -> int:
        """Degree from which the Hilbert function equals the Hilbert polynomial."""
        return max(len(self.reduced) - self.krull_dim, 0)

    def render_numerator(self) -> str:
        return render_univariate(self.numerator, "t")


def render_univariate(coeffs: Sequence, var: str = "t") -> str:
    """``1 - 3t^2 + 2t^3`` style text, ascending degree."""
    parts = []
    for k, c in enumerate(coeffs):
        if not c:
            continue
        mag = abs(c)
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        body = str(mag) if not mono else (mono if mag == 1 else f"{mag}{mono}")
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    if not parts:
        return "0"
    text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


def _hilbert_polynomial(reduced: list[int], d: int) -> tuple[Fraction, ...]:
    """Coefficients (ascending in ``s``) of ``sum_k P_k * C(s - k + d - 1, d - 1)``."""
    if d == 0:
        return ()
    total = [Fraction(0)] * d
    denom = factorial(d - 1)
    for k, pk in enumerate(reduced):
        if not pk:
            continue
        poly = [Fraction(1)]
        for j in range(1, d):
            poly = _mul(poly, [Fraction(j - k), Fraction(1)]) or [Fraction(0)]
        for i, c in enumerate(poly):
            total[i] += pk * c / denom
    while total and total[-1] == 0:
        total.pop()
    return tuple(total)


def hilbert_series(I: Ideal) -> HilbertData:
    """Hilbert series data of ``S/I`` (``I`` proper and homogeneous)."""
    if I._hilbert is not None:
        return I._hilbert
    if not I.is_homogeneous:
        raise ValueError("Hilbert series needs a homogeneous ideal")
    if I.is_unit():
        raise ValueError("the unit ideal has zero Hilbert series")
    N = I.ring.nvars
    leads = [] if I.is_zero() else I.gb().lead_exponents()
    Q = monomial_numerator(leads)
    P = list(Q)
    d = N
    while d > 0 and sum(P) == 0:
        # synthetic division by (1 - t)
        out = []
        acc = 0
        for c in P[:-1]:
            acc += c
            out.append(acc)
        P = _trim(out)
        d -= 1
    data = HilbertData(tuple(Q), N, tuple(P), d, sum(P), _hilbert_polynomial(P, d))
    I._hilbert = data
    return data


def hilbert_function(I: Ideal, d: int) -> int:
    """``dim_K (S/I)_d``."""
    if d < 0:
        raise ValueError("degree must be non-negative")
    if I.is_unit():
        return 0
    return hilbert_series(I).hilbert_function(d)


def hilbert_polynomial(I: Ideal) -> tuple[Fraction, ...]:
    """Hilbert polynomial of ``S/I`` as ascending coefficients (empty for the zero polynomial)."""
    return hilbert_series(I).hilbert_polynomial


def dim_deg(I: Ideal) -> tuple[int, int]:
    """(projective dimension of ``V(I)``, degree); ``-1`` means ``V(I)`` is empty."""
    if I.is_unit():
        return -1, 0
    H = hilbert_series(I)
    return H.krull_dim - 1, H.degree


def saturation_degree(I: Ideal) -> int:
    """Least ``d >= 0`` with ``I_e = (I^sat)_e`` for every ``e >= d``."""
    if I.saturated or I.is_zero():
        return 0
    S = saturate(I)
    N = I.ring.nvars
    q_i = list(hilbert_series(I).numerator)
    q_s = [] if S.is_unit() else list(hilbert_series(S).numerator)
    diff = _sub(q_i, q_s)
    # (I^sat / I) has finite length, so diff is divisible by (1 - t)^N
    for _ in range(N):
        out = []
        acc = 0
        for c in diff:
            acc += c
            out.append(acc)
        if out and out[-1] != 0:
            raise ArithmeticError("saturation quotient is not of finite length")
        diff = _trim(out)
    return len(diff)


__all__ = [
    "HilbertData", "dim_deg", "hilbert_function", "hilbert_polynomial", "hilbert_series",
    "monomial_numerator", "render_univariate", "saturation_degree",
]
