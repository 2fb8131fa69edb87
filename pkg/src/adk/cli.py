"""Command-line front end: ``adk <command> ...``.

Exit codes: 0 on success, 1 on a domain error, 2 on a usage error
(bad flags or unparsable input).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import adomain, cb, valuation
from .errors import AdkError, FieldError, ParseError
from .field import parse_field
from .poly import parse
from .tree import PrimeDivisor, monomial_path, parse_path


class UsageError(Exception):
    pass


def _poly(text, F):
    return parse(text, F)


def _path(text, F):
    return parse_path(text, F)


def _vector(text, X):
    try:
        entries = tuple(int(s) for s in text.split(","))
    except ValueError:
        raise UsageError(f"bad value vector {text!r}; expected e.g. 1,2") from None
    if len(entries) != len(X):
        raise UsageError(f"value vector {text!r} needs {len(X)} entries")
    return adomain.ValueVector(X, entries)


def _divisor_set(args, F):
    if not args.set:
        raise UsageError("at least one --set path is required")
    return adomain.FiniteDivisorSet(PrimeDivisor(_path(p, F)) for p in args.set)


def _emit(args, text, data):
    if args.json:
        print(json.dumps(data, sort_keys=True))
    else:
        print(text)


def _fmt_value(v):
    return "inf" if v == valuation.INFINITE else str(v)


def cmd_val(args, F):
    D = PrimeDivisor(_path(args.divisor, F))
    polys = list(args.poly)
    if args.file:
        with open(args.file, encoding="utf-8") as fh:
            polys += [line.strip() for line in fh if line.strip()]
    if not polys:
        raise UsageError("no polynomial given")
    if len(args.poly) == 2 and not args.file:
        v = valuation.val_frac(_poly(polys[0], F), _poly(polys[1], F), D)
        _emit(args, _fmt_value(v), {"divisor": str(D), "value": _fmt_value(v)})
        return
    parsed = [_poly(p, F) for p in polys]
    values = [valuation.val(f, D) for f in parsed]
    _emit(args, "\n".join(str(v) for v in values),
          {"divisor": str(D), "values": [{"poly": str(f), "value": v}
                                         for f, v in zip(parsed, values)]})


def cmd_position(args, F):
    pos = valuation.position(_poly(args.f, F), _poly(args.g, F), _path(args.point, F))
    _emit(args, str(pos), {"position": str(pos)})


def cmd_member(args, F):
    m = adomain.member_bounded(_poly(args.f, F), _poly(args.g, F), args.level)
    _emit(args, str(m), {"member": m.member,
                         "witness": None if m.witness is None else str(m.witness),
                         "delta": m.delta})


def cmd_profile(args, F):
    prof = adomain.value_profile(_poly(args.f, F), _poly(args.g, F), args.level)
    data = prof.to_json()
    lines = [f"level {prof.level}"]
    lines += [f"visited {row['path']} {row['delta']}" for row in data["visited"]]
    lines += [f"generic {row['path']} {row['coefficient']}" for row in data["generic"]]
    lines += [f"unresolved {row['path']} {row['factor']}" for row in data["unresolved"]]
    _emit(args, "\n".join(lines), data)


def cmd_jacobson(args, F):
    ok = adomain.jacobson_witness(_poly(args.f, F), args.level)
    _emit(args, str(ok).lower(), {"witness": ok})


def _vector_json(v):
    return [{"path": str(p), "value": e} for p, e in v.as_dict().items()]


def cmd_ideal(args, F):
    X = _divisor_set(args, F)
    if args.action == "values":
        v = adomain.ideal_values([_poly(p, F) for p in args.items], X)
        _emit(args, str(v), _vector_json(v))
    elif args.action == "ops":
        if len(args.items) != 2 or not args.op:
            raise UsageError("ideal ops needs --op and two value vectors")
        a, b = (_vector(s, X) for s in args.items)
        v = adomain.ideal_ops(a, b, args.op)
        _emit(args, str(v), _vector_json(v))
    elif args.action == "contains":
        if len(args.items) != 2:
            raise UsageError("ideal contains needs a value vector and a polynomial")
        ok = adomain.contains(_vector(args.items[0], X), _poly(args.items[1], F))
        _emit(args, str(ok).lower(), {"contains": ok})
    else:
        if len(args.items) != 1:
            raise UsageError("ideal decompose needs one value vector")
        comps = adomain.decompose(_vector(args.items[0], X))
        text = "\n".join(f"{V} {e}" for V, e in comps) or "unit"
        _emit(args, text, [{"path": str(V), "exponent": e} for V, e in comps])


def cmd_classify(args, F):
    kind = adomain.classify_max_ideal(PrimeDivisor(_path(args.divisor, F)), args.level)
    _emit(args, str(kind), {"kind": str(kind)})


def cmd_cb(args, F):
    X = cb.parse_expr(args.expr, F)
    if args.action == "derive":
        Y = cb.derivative(X)
        _emit(args, str(Y), {"derivative": str(Y)})
    elif args.action == "rank":
        rep = cb.cb_report(X)
        _emit(args, str(rep.rank), rep.to_json())
    elif args.action == "isolated":
        Y = cb.isolated_points(X)
        _emit(args, str(Y), {"isolated": str(Y)})
    else:
        ok = cb.limits_are_divisors(X)
        _emit(args, str(ok).lower(), {"limits_are_divisors": ok})


def cmd_monomial_path(args, F):
    p = monomial_path(args.a, args.b, F)
    _emit(args, str(p), {"path": str(p)})


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", default=argparse.SUPPRESS,
                        help="q, fp:<p> or ext:<base>:<modulus> (default: $ADK_FIELD or q)")
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit JSON")

    ap = argparse.ArgumentParser(prog="adk", parents=[common],
                                 description="Divisorial valuations over k[x,y] at the origin.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("val", parents=[common], help="value of f (or f/g) at a divisor")
    p.add_argument("--divisor", required=True, help='point path, e.g. "[0, inf]"')
    p.add_argument("--file", help="file with one polynomial per line")
    p.add_argument("poly", nargs="*")
    p.set_defaults(func=cmd_val)

    p = sub.add_parser("position", parents=[common], help="position of f/g at a point")
    p.add_argument("--point", required=True)
    p.add_argument("f")
    p.add_argument("g")
    p.set_defaults(func=cmd_position)

    for name, func, helptext in (("member", cmd_member, "is f/g in A(Div_d)"),
                                 ("profile", cmd_profile, "value profile of f/g over Div_d")):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("--level", type=int, required=True)
        p.add_argument("f")
        p.add_argument("g")
        p.set_defaults(func=func)

    p = sub.add_parser("jacobson", parents=[common], help="check v(f) >= 1 on Div_d")
    p.add_argument("--level", type=int, required=True)
    p.add_argument("f")
    p.set_defaults(func=cmd_jacobson)

    p = sub.add_parser("ideal", parents=[common], help="ideals over a finite divisor set")
    p.add_argument("action", choices=["values", "ops", "contains", "decompose"])
    p.add_argument("--set", action="append", help="divisor path (repeat)")
    p.add_argument("--op", choices=["intersect", "product", "sum"])
    p.add_argument("items", nargs="+", help="generators or value vectors like 1,2")
    p.set_defaults(func=cmd_ideal)

    p = sub.add_parser("classify", parents=[common], help="maximal ideal of a divisor in A(Div_d)")
    p.add_argument("--divisor", required=True)
    p.add_argument("--level", type=int, required=True)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("cb", parents=[common], help="Cantor-Bendixson analysis of a tree set")
    p.add_argument("action", choices=["derive", "rank", "isolated", "limits"])
    p.add_argument("--expr", required=True)
    p.set_defaults(func=cmd_cb)

    p = sub.add_parser("monomial-path", parents=[common], help="path of a monomial divisor")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.set_defaults(func=cmd_monomial_path)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    args.json = getattr(args, "json", False)
    spec = getattr(args, "field", None) or os.environ.get("ADK_FIELD") or "q"
    try:
        F = parse_field(spec)
    except (FieldError, ParseError) as exc:
        print(f"adk: {exc}", file=sys.stderr)
        return 2
    try:
        args.func(args, F)
    except (UsageError, ParseError, OSError) as exc:
        print(f"adk: {exc}", file=sys.stderr)
        return 2
    except AdkError as exc:
        print(f"adk: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"adk: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
