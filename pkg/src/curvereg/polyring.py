"""Exact coefficient fields, monomial orders and graded polynomials.

Polynomials live in ``K[x_0, ..., x_n]`` where ``K`` is either a prime field
``F_p`` (default ``p = 32003``) or the rationals.  Values are immutable.
"""

from __future__ import annotations

import ast
from fractions import Fraction
from functools import cached_property
from operator import add
from typing import Iterable, Mapping, Sequence

from sympy import isprime

DEFAULT_PRIME = 32003
_ROW_BASE = 1 << 12


class Field:
    """The prime field ``F_p`` or, when ``p`` is None, the rationals."""

    def __init__(self, p: int | None = DEFAULT_PRIME):
        if p is not None:
            p = int(p)
            if p < 2 or not isprime(p):
                raise ValueError(f"{p} is not prime")
        self.p = p

    @property
    def rational(self) -> bool:
        return self.p is None

    def __eq__(self, other):
        return isinstance(other, Field) and other.p == self.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __repr__(self):
        return "QQ" if self.p is None else f"GF({self.p})"

    def __call__(self, x) -> int | Fraction:
        p = self.p
        if p is None:
            return Fraction(x)
        if isinstance(x, Fraction):
            return x.numerator * pow(x.denominator, -1, p) % p
        return int(x) % p

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        if self.p is None:
            return 1 / Fraction(a)
        return pow(a, -1, self.p)

    def normalizer(self):
        """Return a function reducing raw integer/Fraction results into the field."""
        p = self.p
        if p is None:
            return lambda x: x
        return lambda x: x % p

    def symmetric(self, c) -> int | Fraction:
        """Representative of ``c`` closest to zero (for display)."""
        p = self.p
        if p is None:
            return c
        return c - p if c > p // 2 else c

    def random_element(self, rng, nonzero: bool = True):
        p = self.p
        if p is None:
            lo = 1 if nonzero else 0
            v = rng.randint(lo, 50)
            return Fraction(v if rng.random() < 0.5 else -v) or Fraction(1)
        return rng.randrange(1 if nonzero else 0, p)

    def to_json(self):
        return "rational" if self.p is None else {"prime": self.p}


QQ = Field(None)
GF32003 = Field(DEFAULT_PRIME)


class MonomialOrder:
    """A monomial order given by an integer weight matrix.

    ``kind`` is ``"grevlex"``, ``"lex"`` or ``"block"``.  A block order compares
    the first ``block`` variables by grevlex and breaks ties by grevlex on the
    remaining ones; it is an elimination order for the first block.  ``perm``
    reorders the variables before the base order is applied: position ``j`` of
    the order is variable ``perm[j]``.
    """

    def __init__(self, kind: str = "grevlex", block: int = 0, perm: Sequence[int] | None = None):
        if kind not in ("grevlex", "lex", "block"):
            raise ValueError(f"unknown monomial order {kind!r}")
        if kind == "block" and block < 1:
            raise ValueError("block order needs a positive block size")
        self.kind = kind
        self.block = block if kind == "block" else 0
        self.perm = tuple(perm) if perm is not None else None
        self._weights: dict[int, tuple[int, ...]] = {}

    def __eq__(self, other):
        return (isinstance(other, MonomialOrder) and other.kind == self.kind
                and other.block == self.block and other.perm == self.perm)

    def __hash__(self):
        return hash((self.kind, self.block, self.perm))

    def __repr__(self):
        extra = f", block={self.block}" if self.block else ""
        extra += f", perm={self.perm}" if self.perm else ""
        return f"MonomialOrder({self.kind!r}{extra})"

    def matrix(self, nvars: int) -> list[list[int]]:
        """Weight matrix rows, in the permuted variable positions."""
        def grevlex_rows(lo, hi):
            rows = [[1 if lo <= j < hi else 0 for j in range(nvars)]]
            for j in range(hi - 1, lo, -1):
                rows.append([-1 if i == j else 0 for i in range(nvars)])
            return rows

        if self.kind == "lex":
            rows = [[1 if i == j else 0 for i in range(nvars)] for j in range(nvars)]
        elif self.kind == "grevlex":
            rows = grevlex_rows(0, nvars)
        else:
            if self.block > nvars:
                raise ValueError("block larger than the number of variables")
            rows = grevlex_rows(0, self.block)
            if self.block < nvars:
                rows += grevlex_rows(self.block, nvars)
        if self.perm is not None:
            if sorted(self.perm) != list(range(nvars)):
                raise ValueError("permutation does not match the ring")
            permuted = []
            for row in rows:
                new = [0] * nvars
                for pos, var in enumerate(self.perm):
                    new[var] = row[pos]
                permuted.append(new)
            rows = permuted
        return rows

    def weights(self, nvars: int) -> tuple[int, ...]:
        """Per-variable integer weights ``c`` with ``key(e) = sum(c_i * e_i)``.

        Rows of the weight matrix are packed with a large base, so the key is
        linear in the exponents and integer comparison of keys is the order
        (valid while degrees stay below ``2**12``).
        """
        w = self._weights.get(nvars)
        if w is None:
            rows = self.matrix(nvars)
            r = len(rows)
            w = tuple(sum(rows[k][i] * _ROW_BASE ** (r - 1 - k) for k in range(r))
                      for i in range(nvars))
            self._weights[nvars] = w
        return w

    def key(self, exps: Sequence[int]) -> int:
        return sum(map(int.__mul__, self.weights(len(exps)), exps))

    def elimination_vars(self) -> tuple[int, ...]:
        if self.kind != "block":
            return ()
        perm = self.perm or tuple(range(self.block))
        return tuple(perm[: self.block])


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


def mono_cmp(order: MonomialOrder, a: Sequence[int], b: Sequence[int]) -> int:
    """Three-way comparison of exponent vectors: -1, 0 or 1."""
    if len(a) != len(b):
        raise ValueError("monomials from rings of different dimension")
    ka, kb = order.key(a), order.key(b)
    return (ka > kb) - (ka < kb)


class Ring:
    """``K[x_0, ..., x_n]`` with ``nvars = n + 1`` variables."""

    def __init__(self, nvars: int, field: Field = GF32003, names: Sequence[str] | None = None,
                 order: MonomialOrder = GREVLEX):
        if nvars < 1:
            raise ValueError("a ring needs at least one variable")
        self.nvars = nvars
        self.field = field
        self.names = tuple(names) if names is not None else tuple(f"x{i}" for i in range(nvars))
        if len(self.names) != nvars:
            raise ValueError("wrong number of variable names")
        self.order = order

    @property
    def n(self) -> int:
        """Dimension of the ambient projective space."""
        return self.nvars - 1

    def __eq__(self, other):
        return (isinstance(other, Ring) and other.nvars == self.nvars
                and other.field == self.field and other.names == self.names)

    def __hash__(self):
        return hash((self.nvars, self.field, self.names))

    def __repr__(self):
        return f"Ring({self.nvars}, {self.field!r})"

    @cached_property
    def gens(self) -> tuple["Polynomial", ...]:
        return tuple(self.var(i) for i in range(self.nvars))

    def var(self, i: int) -> "Polynomial":
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, {tuple(e): self.field(1)})

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.const(1)

    def const(self, c) -> "Polynomial":
        c = self.field(c)
        return Polynomial(self, {(0,) * self.nvars: c} if c else {})

    def monomial(self, exps: Sequence[int], coeff=1) -> "Polynomial":
        if len(exps) != self.nvars:
            raise ValueError("exponent vector length does not match the ring")
        c = self.field(coeff)
        return Polynomial(self, {tuple(exps): c} if c else {})

    def linear_form(self, coeffs: Sequence) -> "Polynomial":
        if len(coeffs) != self.nvars:
            raise ValueError("coefficient vector length does not match the ring")
        f = self.field
        terms = {}
        for i, c in enumerate(coeffs):
            c = f(c)
            if c:
                e = [0] * self.nvars
                e[i] = 1
                terms[tuple(e)] = c
        return Polynomial(self, terms)

    def with_field(self, field: Field) -> "Ring":
        return Ring(self.nvars, field, self.names, self.order)

    def parse(self, text: str) -> "Polynomial":
        """Parse ``"x0^2 - 3*x1*x2"`` style text (``^`` or ``**`` for powers)."""
        try:
            tree = ast.parse(text.replace("^", "**"), mode="eval")
        except SyntaxError as exc:
            raise ValueError(f"cannot parse polynomial {text!r}: {exc.msg} at column {exc.offset}") from None
        index = {name: i for i, name in enumerate(self.names)}
        return _eval_ast(tree.body, self, index, text)

    def monomials_of_degree(self, d: int) -> list[tuple[int, ...]]:
        """All exponent vectors of total degree ``d``."""
        out: list[tuple[int, ...]] = []

        def rec(prefix, left, slots):
            if slots == 1:
                out.append(tuple(prefix + [left]))
                return
            for a in range(left, -1, -1):
                rec(prefix + [a], left - a, slots - 1)

        rec([], d, self.nvars)
        return out


def _eval_ast(node, ring: Ring, index: Mapping[str, int], text: str) -> "Polynomial":
    if isinstance(node, ast.BinOp):
        left = _eval_ast(node.left, ring, index, text)
        if isinstance(node.op, ast.Pow):
            if not (isinstance(node.right, ast.Constant) and isinstance(node.right.value, int)):
                raise ValueError(f"exponent must be a non-negative integer in {text!r} (column {node.col_offset})")
            return left ** node.right.value
        right = _eval_ast(node.right, ring, index, text)
        if isinstance(node.op, ast.Add):
            return left + right
        if isinstance(node.op, ast.Sub):
            return left - right
        if isinstance(node.op, ast.Mult):
            return left * right
        if isinstance(node.op, ast.Div):
            if not right.is_constant() or right.is_zero():
                raise ValueError(f"division only by nonzero constants in {text!r}")
            return left * ring.field.inv(right.constant_coefficient())
        raise ValueError(f"unsupported operator in {text!r} (column {node.col_offset})")
    if isinstance(node, ast.UnaryOp):
        val = _eval_ast(node.operand, ring, index, text)
        if isinstance(node.op, ast.USub):
            return -val
        if isinstance(node.op, ast.UAdd):
            return val
    if isinstance(node, ast.Constant) and isinstance(node.value, int):
        return ring.const(node.value)
    if isinstance(node, ast.Name):
        if node.id not in index:
            raise ValueError(f"unknown variable {node.id!r} in {text!r} (column {node.col_offset})")
        return ring.var(index[node.id])
    raise ValueError(f"unsupported syntax in {text!r} (column {getattr(node, 'col_offset', 0)})")


class Polynomial:
    """Immutable sparse polynomial: a mapping from exponent tuples to nonzero coefficients."""

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: Ring, terms: Mapping[tuple[int, ...], object]):
        field = ring.field
        self.ring = ring
        self._terms = {tuple(e): v for e, v in ((e, field(c)) for e, c in terms.items()) if v}
        self._hash = None

    @classmethod
    def _make(cls, ring: Ring, terms: dict) -> "Polynomial":
        """Wrap terms that are already reduced and nonzero (no copying or checks)."""
        f = cls.__new__(cls)
        f.ring = ring
        f._terms = terms
        f._hash = None
        return f

    # -- inspection -------------------------------------------------------
    @property
    def coeffs(self) -> Mapping[tuple[int, ...], object]:
        return self._terms

    def terms(self, order: MonomialOrder | None = None) -> list[tuple[tuple[int, ...], object]]:
        """Terms sorted strictly descending in ``order`` (ring order by default)."""
        order = order or self.ring.order
        w = order.weights(self.ring.nvars)
        return sorted(self._terms.items(), key=lambda t: -sum(map(int.__mul__, w, t[0])))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self._terms)

    def constant_coefficient(self):
        return self._terms.get((0,) * self.ring.nvars, self.ring.field(0))

    def degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self._terms}
        return len(degs) <= 1

    def lead(self, order: MonomialOrder | None = None):
        """Leading (exponents, coefficient)."""
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        return self.terms(order)[0]

    def monic(self, order: MonomialOrder | None = None) -> "Polynomial":
        if not self._terms:
            return self
        return self * self.ring.field.inv(self.lead(order)[1])

    def variables(self) -> set[int]:
        return {i for e in self._terms for i, a in enumerate(e) if a}

    # -- arithmetic -------------------------------------------------------
    def _check(self, other: "Polynomial"):
        if other.ring != self.ring:
            raise ValueError("polynomials from different rings")

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        return self.ring.const(other)

    def __add__(self, other):
        other = self._coerce(other)
        norm = self.ring.field.normalizer()
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = norm(out.get(e, 0) + c)
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Polynomial._make(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        norm = self.ring.field.normalizer()
        return Polynomial._make(self.ring, {e: norm(-c) for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = self.ring.field(other)
            if not c:
                return self.ring.zero()
            norm = self.ring.field.normalizer()
            return Polynomial._make(self.ring, {e: norm(v * c) for e, v in self._terms.items()})
        self._check(other)
        norm = self.ring.field.normalizer()
        out: dict = {}
        for ea, ca in self._terms.items():
            for eb, cb in other._terms.items():
                e = tuple(map(add, ea, eb))
                out[e] = out.get(e, 0) + ca * cb
        return Polynomial._make(self.ring, {e: v for e, v in ((e, norm(v)) for e, v in out.items()) if v})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == self.ring.const(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __call__(self, *point):
        return poly_eval(self, point[0] if len(point) == 1 and isinstance(point[0], (list, tuple)) else point)

    def substitute(self, images: Sequence["Polynomial"]) -> "Polynomial":
        """Replace ``x_i`` by ``images[i]`` (all in one target ring)."""
        if len(images) != self.ring.nvars:
            raise ValueError("need one image per variable")
        target = images[0].ring
        powers: list[dict[int, Polynomial]] = [{0: target.one()} for _ in images]

        def pw(i, a):
            cache = powers[i]
            if a not in cache:
                cache[a] = pw(i, a - 1) * images[i]
            return cache[a]

        norm = target.field.normalizer()
        acc: dict = {}
        for e, c in self._terms.items():
            term = None
            for i, a in enumerate(e):
                if a:
                    term = pw(i, a) if term is None else term * pw(i, a)
            if term is None:
                term = target.one()
            for te, tc in term.coeffs.items():
                acc[te] = acc.get(te, 0) + c * tc
        return Polynomial._make(target, {e: v for e, v in ((e, norm(v)) for e, v in acc.items()) if v})

    def divide_exact(self, divisor: "Polynomial") -> "Polynomial":
        """Exact quotient; raises ValueError if ``divisor`` does not divide."""
        self._check(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        order = self.ring.order
        de, dc = divisor.lead(order)
        inv = self.ring.field.inv(dc)
        rem = self
        quot = self.ring.zero()
        while rem:
            e, c = rem.lead(order)
            if any(a < b for a, b in zip(e, de)):
                raise ValueError("polynomial is not divisible")
            q = self.ring.monomial(tuple(a - b for a, b in zip(e, de)), c * inv)
            quot = quot + q
            rem = rem - q * divisor
        return quot

    # -- rendering --------------------------------------------------------
    def render(self, order: MonomialOrder | None = None) -> str:
        """Canonical text: descending terms, explicit ``*``, ``^`` exponents."""
        if not self._terms:
            return "0"
        field = self.ring.field
        names = self.ring.names
        pieces = []
        for e, c in self.terms(order):
            c = field.symmetric(c)
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            mono = "*".join(names[i] + (f"^{a}" if a > 1 else "") for i, a in enumerate(e) if a)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            pieces.append((sign, body))
        first_sign, first = pieces[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"Polynomial({self.render()!r})"


def poly_mul(f: Polynomial, g: Polynomial) -> Polynomial:
    return f * g


def poly_eval(f: Polynomial, point: Sequence) -> object:
    """Evaluate ``f`` exactly at ``point``."""
    if len(point) != f.ring.nvars:
        raise ValueError(f"point has {len(point)} coordinates, ring has {f.ring.nvars} variables")
    field = f.ring.field
    pt = [field(x) for x in point]
    total = 0
    for e, c in f.coeffs.items():
        v = c
        for x, a in zip(pt, e):
            if a:
                v = v * x ** a
        total += v
    return field(total) if field.p is not None else Fraction(total)


def as_polys(ring: Ring, items: Iterable) -> list[Polynomial]:
    """Coerce strings / polynomials to polynomials of ``ring``."""
    out = []
    for it in items:
        if isinstance(it, str):
            out.append(ring.parse(it))
        elif isinstance(it, Polynomial):
            if it.ring != ring:
                raise ValueError("polynomial from a different ring")
            out.append(it)
        else:
            out.append(ring.const(it))
    return out
