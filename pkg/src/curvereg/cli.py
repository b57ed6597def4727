"""Command-line front end: build curves from JSON documents, compute invariants, run checks.

Usage: ``curvereg COMMAND [SPEC] [options]`` where ``SPEC`` is a path, ``-``
for standard input, or inline JSON.  A document looks like::

    {"field": {"prime": 32003}, "ambient": 4,
     "components": [{"named": {"giaimo": 4}}]}

Component constructors: ``{"linear": [forms]}`` (a line given by ``n - 1``
forms), ``{"plane_curve": {"subspace": [forms], "form": text}}``,
``{"rnc": {"degree": d, "rows": [[...], ...]}}`` and ``{"named": ...}`` with
``{"giaimo": m}``, ``"twisted_config"``, ``{"tree": {"steps": [...]}}`` or
``{"random": {"seed": s, "budget": {...}}}``.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field as dc_field
from typing import Any

from sympy import isprime

from .curves import (Budget, ConstructionError, Curve, TreeSpec, TreeStep, curve_union, giaimo_curve,
                     is_connected, plane_curve, random_connected_curve, rational_normal_curve, tree,
                     twisted_config)
from .geometry import LinearSubspace, secant_report, xi
from .invariants import dim_deg, hilbert_series, render_univariate
from .polyring import QQ, Field, Ring
from .resolution import betti_numbers, regularity
from .verify import (FAIL, SUITES, CheckReport, check_main_theorem, check_mincur, check_p3_theorem,
                     run_suite)


class SpecError(ValueError):
    """A curve-spec document is malformed; ``where`` locates the problem."""

    def __init__(self, where: str, message: str):
        super().__init__(f"{where}: {message}")
        self.where = where


_TOP_KEYS = {"field", "ambient", "components"}
_COMPONENT_KEYS = {"linear", "plane_curve", "rnc", "named"}


@dataclass
class CurveSpecDocument:
    prime: int | None
    ambient: int | None
    components: list[dict] = dc_field(default_factory=list)

    @property
    def field(self) -> Field:
        return QQ if self.prime is None else Field(self.prime)

    def to_json(self) -> dict:
        f: Any = "rational" if self.prime is None else {"prime": self.prime}
        out: dict = {"field": f}
        if self.ambient is not None:
            out["ambient"] = self.ambient
        out["components"] = self.components
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def _load_json(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(f"line {exc.lineno}, column {exc.colno}", exc.msg) from None


def parse_spec(text: str) -> CurveSpecDocument:
    """Validate a curve-spec document (JSON text)."""
    doc = _load_json(text)
    if not isinstance(doc, dict):
        raise SpecError("$", "the document must be an object")
    unknown = set(doc) - _TOP_KEYS
    if unknown:
        raise SpecError("$", f"unknown keys {sorted(unknown)}")
    f = doc.get("field", {"prime": 32003})
    if f == "rational":
        prime = None
    elif isinstance(f, dict) and set(f) == {"prime"}:
        prime = f["prime"]
        if not isinstance(prime, int) or isinstance(prime, bool):
            raise SpecError("$.field.prime", "expected an integer")
        if not isprime(prime):
            raise SpecError("$.field.prime", f"{prime} is not prime")
    else:
        raise SpecError("$.field", 'expected {"prime": p} or "rational"')
    ambient = doc.get("ambient")
    if ambient is not None and (not isinstance(ambient, int) or isinstance(ambient, bool) or ambient < 1):
        raise SpecError("$.ambient", "expected a positive integer")
    comps = doc.get("components")
    if not isinstance(comps, list) or not comps:
        raise SpecError("$.components", "expected a nonempty list")
    for i, c in enumerate(comps):
        where = f"$.components[{i}]"
        if not isinstance(c, dict) or len(c) != 1:
            raise SpecError(where, "each component is an object with exactly one constructor key")
        key = next(iter(c))
        if key not in _COMPONENT_KEYS:
            raise SpecError(where, f"unknown constructor {key!r}")
        _validate_component(key, c[key], f"{where}.{key}", ambient)
    return CurveSpecDocument(prime, ambient, comps)


def _need_ambient(ambient, where):
    if ambient is None:
        raise SpecError(where, "this constructor needs the document's ambient dimension")


def _validate_component(key: str, body, where: str, ambient):
    if key == "linear":
        _need_ambient(ambient, where)
        if not isinstance(body, list) or not all(isinstance(f, str) for f in body):
            raise SpecError(where, "expected a list of linear forms")
        if len(body) != ambient - 1:
            raise SpecError(where, f"a line in P^{ambient} needs {ambient - 1} forms, got {len(body)}")
    elif key == "plane_curve":
        _need_ambient(ambient, where)
        if not isinstance(body, dict) or set(body) != {"subspace", "form"}:
            raise SpecError(where, 'expected {"subspace": [forms], "form": text}')
        if not isinstance(body["subspace"], list) or len(body["subspace"]) != ambient - 2:
            raise SpecError(f"{where}.subspace", f"a plane in P^{ambient} needs {ambient - 2} forms")
        if not isinstance(body["form"], str):
            raise SpecError(f"{where}.form", "expected text")
    elif key == "rnc":
        _need_ambient(ambient, where)
        if not isinstance(body, dict) or set(body) != {"degree", "rows"}:
            raise SpecError(where, 'expected {"degree": d, "rows": [[...]]}')
        d = body["degree"]
        if not isinstance(d, int) or d < 1:
            raise SpecError(f"{where}.degree", "expected a positive integer")
        rows = body["rows"]
        if not isinstance(rows, list) or len(rows) != ambient + 1:
            raise SpecError(f"{where}.rows", f"expected {ambient + 1} rows")
        for j, r in enumerate(rows):
            if not isinstance(r, list) or len(r) != d + 1 or not all(isinstance(c, int) for c in r):
                raise SpecError(f"{where}.rows[{j}]", f"expected {d + 1} integers")
    elif key == "named":
        if body == "twisted_config":
            if ambient not in (None, 4):
                raise SpecError(where, "the twisted configuration lives in P^4")
            return
        if not isinstance(body, dict) or len(body) != 1:
            raise SpecError(where, 'expected {"giaimo": m}, "twisted_config", {"tree": ...} or {"random": ...}')
        name, arg = next(iter(body.items()))
        if name == "giaimo":
            if not isinstance(arg, int) or arg < 4:
                raise SpecError(f"{where}.giaimo", "m must be an integer >= 4")
            if ambient not in (None, 4):
                raise SpecError(where, "the construction lives in P^4")
        elif name == "tree":
            if not isinstance(arg, dict) or "steps" not in arg or set(arg) - {"steps", "ambient"}:
                raise SpecError(f"{where}.tree", 'expected {"steps": [...], "ambient": n?}')
            for j, s in enumerate(arg["steps"]):
                if not isinstance(s, dict) or "degree" not in s or set(s) - {"degree", "attach", "directions"}:
                    raise SpecError(f"{where}.tree.steps[{j}]", "expected degree, attach, directions")
        elif name == "random":
            if not isinstance(arg, dict) or "seed" not in arg or set(arg) - {"seed", "budget"}:
                raise SpecError(f"{where}.random", 'expected {"seed": s, "budget": {...}}')
            bud = arg.get("budget", {})
            bad = set(bud) - {"max_components", "max_degree", "max_ambient"}
            if bad:
                raise SpecError(f"{where}.random.budget", f"unknown keys {sorted(bad)}")
        else:
            raise SpecError(where, f"unknown named construction {name!r}")


def build_curve(doc: CurveSpecDocument) -> Curve:
    """Construct the curve described by a validated document."""
    field = doc.field
    parts: list[Curve] = []
    ring = Ring(doc.ambient + 1, field) if doc.ambient is not None else None
    for i, c in enumerate(doc.components):
        key, body = next(iter(c.items()))
        where = f"$.components[{i}].{key}"
        try:
            if key == "linear":
                L = LinearSubspace(ring, body)
                if L.dim != 1:
                    raise SpecError(where, "the forms are dependent")
                p, q = L.points()
                from .curves import linear_curve
                parts.append(linear_curve(ring, p, q, name=f"line{i}"))
            elif key == "plane_curve":
                parts.append(plane_curve(ring, LinearSubspace(ring, body["subspace"]), body["form"],
                                         name=f"plane{i}"))
            elif key == "rnc":
                parts.append(rational_normal_curve(ring, body["degree"], body["rows"], name=f"rnc{i}"))
            else:
                parts.append(_named(body, field))
        except SpecError:
            raise
        except (ValueError, SyntaxError) as exc:
            raise SpecError(where, str(exc)) from None
    rings = {P.ring.nvars for P in parts}
    if len(rings) != 1 or (doc.ambient is not None and rings != {doc.ambient + 1}):
        raise SpecError("$.ambient", "components live in ambient spaces of different dimension")
    return parts[0] if len(parts) == 1 else curve_union(parts)


def _named(body, field: Field) -> Curve:
    if body == "twisted_config":
        return twisted_config(field).union
    name, arg = next(iter(body.items()))
    if name == "giaimo":
        return giaimo_curve(arg, field=field)
    if name == "tree":
        steps = tuple(TreeStep(s["degree"], tuple(s["attach"]) if s.get("attach") else None,
                               tuple(tuple(p) for p in s["directions"]) if s.get("directions") else None)
                      for s in arg["steps"])
        return tree(TreeSpec(steps, arg.get("ambient")), field)
    budget = Budget(**arg.get("budget", {}))
    return random_connected_curve(arg["seed"], budget, field)


def read_spec(arg: str, field_override: str | None = None) -> CurveSpecDocument:
    if arg == "-":
        text = sys.stdin.read()
    elif arg.lstrip().startswith("{"):
        text = arg
    else:
        try:
            with open(arg, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise SpecError(arg, exc.strerror or str(exc)) from None
    doc = parse_spec(text)
    if field_override is not None:
        doc.prime = _parse_field(field_override)
    return doc


def _parse_field(text: str) -> int | None:
    if text == "rational":
        return None
    try:
        p = int(text)
    except ValueError:
        raise SpecError("--field", f"expected a prime or 'rational', got {text!r}") from None
    if not isprime(p):
        raise SpecError("--field", f"{p} is not prime")
    return p


def _parse_point(token: str, nvars: int) -> list[int]:
    token = token.strip()
    if token.startswith("e") and token[1:].isdigit():
        i = int(token[1:])
        if i >= nvars:
            raise SpecError("--line", f"{token} is out of range")
        return [int(j == i) for j in range(nvars)]
    try:
        pt = [int(c) for c in token.split(":")]
    except ValueError:
        raise SpecError("--line", f"cannot read point {token!r}") from None
    if len(pt) != nvars:
        raise SpecError("--line", f"point {token!r} needs {nvars} coordinates")
    return pt


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


# -- commands -------------------------------------------------------------------


def cmd_build(C: Curve, args) -> int:
    dim, deg = dim_deg(C.ideal)
    print(f"curve in P^{C.ring.nvars - 1}, degree {deg}, components: "
          + ", ".join(f"{c.name} ({c.kind}, degree {c.degree})" for c in C.components))
    print("ideal:")
    for g in C.ideal.gb().basis:
        print(f"  {g.render()}")
    return 0


def cmd_invariants(C: Curve, args) -> int:
    H = hilbert_series(C.ideal)
    X = xi(C)
    info = {
        "dimension": H.krull_dim - 1,
        "degree": H.degree,
        "span_dim": X.span_dim,
        "xi": X.xi,
        "connected": is_connected(C),
        "hilbert_numerator": render_univariate(H.numerator),
        "hilbert_polynomial": render_univariate(list(H.hilbert_polynomial), "t"),
    }
    if args.emit == "jsonl":
        print(json.dumps(info, sort_keys=True))
    else:
        for k, v in info.items():
            print(f"{k}: {v}")
    return 0


def cmd_betti(C: Curve, args) -> int:
    B = betti_numbers(C.ideal)
    if args.emit == "jsonl":
        print(json.dumps(B.to_json(), sort_keys=True))
    else:
        print(B.render())
    return 0


def cmd_reg(C: Curve, args) -> int:
    r = regularity(C.ideal)
    x = xi(C).xi
    if args.emit == "jsonl":
        print(json.dumps({"reg": r, "xi": x, "maximal": r == x}, sort_keys=True))
    else:
        print(f"reg(I_C) = {r}, Ξ = {x}, maximal: {_yes(r == x)}")
    return 0


def cmd_secant(C: Curve, args) -> int:
    if not args.line:
        raise SpecError("--line", "give two points, e.g. --line e0,e3 or --line 1:1:1:1:0,e4")
    tokens = args.line.split(",")
    pts = [_parse_point(t, C.ring.nvars) for t in tokens]
    L = LinearSubspace.from_points(C.ring, pts)
    if L.dim < 0:
        raise SpecError("--line", "no points given")
    rep = secant_report(C, L)
    if args.emit == "jsonl":
        print(json.dumps({"degree": rep.degree, "regularity": rep.regularity, "xi": rep.xi,
                          "extremal": rep.extremal, "note": rep.note}, sort_keys=True))
    elif rep.degree is None:
        print(f"{rep.note}, extremal: no")
    else:
        print(f"degree {rep.degree}, extremal: {_yes(rep.extremal)}")
    return 0


def _emit_reports(reports: list[CheckReport], args) -> int:
    if args.emit == "jsonl":
        for r in reports:
            print(r.to_jsonl())
    else:
        counts: dict[str, dict[str, int]] = {}
        for r in reports:
            print(r.summary())
            counts.setdefault(r.check, {"pass": 0, "fail": 0, "inapplicable": 0})[r.verdict] += 1
        print()
        print(f"{'check':<22} {'pass':>5} {'fail':>5} {'inapplicable':>13}")
        for name in sorted(counts):
            c = counts[name]
            print(f"{name:<22} {c['pass']:>5} {c['fail']:>5} {c['inapplicable']:>13}")
    return 1 if any(r.verdict == FAIL for r in reports) else 0


def cmd_verify(C: Curve | None, args) -> int:
    if C is not None:
        reports = [check_main_theorem(C, seed=args.seed), check_mincur(C, seed=args.seed)]
        if C.ring.nvars == 4:
            reports.append(check_p3_theorem(C, seed=args.seed))
    else:
        reports = run_suite(args.suite, seed=args.seed, count=args.count)
    return _emit_reports(reports, args)


def cmd_fuzz(args) -> int:
    budget = Budget(max_degree=args.max_degree)
    reports = []
    for k in range(args.count):
        s = args.seed * 1000 + k
        reports.append(check_main_theorem(random_connected_curve(s, budget), seed=s))
    return _emit_reports(reports, args)


COMMANDS = ("build", "invariants", "betti", "reg", "secant", "verify", "fuzz")


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="curvereg", description="Regularity and secant computations for curves.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("spec", nargs="?", help="curve-spec document: path, '-' for stdin, or inline JSON")
    p.add_argument("--field", help="override the field: a prime or 'rational'")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--suite", default="all", choices=["all", *SUITES])
    p.add_argument("--count", type=int, default=3, help="instances per seeded suite")
    p.add_argument("--max-degree", type=int, default=8, help="degree budget for fuzz curves")
    p.add_argument("--emit", choices=["table", "jsonl"], default="table")
    p.add_argument("--line", help="two points e_i or a:b:...:z, comma separated (secant)")
    return p


def main(argv: list[str] | None = None) -> int:
    args = make_parser().parse_args(argv)
    try:
        if args.command == "fuzz":
            return cmd_fuzz(args)
        if args.command == "verify" and args.spec is None:
            return cmd_verify(None, args)
        if args.spec is None:
            raise SpecError("spec", f"the {args.command} command needs a curve-spec document")
        C = build_curve(read_spec(args.spec, args.field))
        handler = {"build": cmd_build, "invariants": cmd_invariants, "betti": cmd_betti, "reg": cmd_reg,
                   "secant": cmd_secant, "verify": cmd_verify}[args.command]
        return handler(C, args)
    except SpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ConstructionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
