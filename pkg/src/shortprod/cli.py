"""Command-line front end.

Exit codes: 0 success, 1 usage or domain error, 2 empty range,
3 internal audit failure (or band search cap exhausted).
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import DomainError, SearchCapExceeded
from .extrema import find_min_max, gaps
from .multipliers import CONSTANTS, pow5_multiplier
from .oracle import oracle_exact
from .rangefinder import RangeQuery, ValidityRange, find_range

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_EMPTY = 2
EXIT_AUDIT = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def _emit(obj, as_json: bool, text: str) -> None:
    print(json.dumps(obj) if as_json else text)


def _range_obj(r: ValidityRange | None) -> dict:
    if r is None:
        return {"empty": True, "lb": None, "ub": None}
    return {"empty": False, "lb": r.lb, "ub": r.ub}


def cmd_range(args) -> int:
    q = RangeQuery(args.z, args.digits, args.base)
    r = find_range(q)
    obj = {"z": q.z, "digits": q.digits, "base": q.base, **_range_obj(r)}
    _emit(obj, args.json, "empty" if r is None else str(r))
    return EXIT_EMPTY if r is None else EXIT_OK


def cmd_table(args) -> int:
    try:
        const = CONSTANTS[args.constant]
    except KeyError:
        raise DomainError(f"unknown constant {args.constant!r}") from None
    if not 1 <= args.from_len <= args.to_len <= len(const.digits):
        raise DomainError(
            f"lengths must satisfy 1 <= from <= to <= {len(const.digits)}"
        )
    # validate every row before printing any of them
    rows = [
        (n, find_range(RangeQuery(const.prefix(n), args.digits, args.base)))
        for n in range(args.from_len, args.to_len + 1)
    ]
    for n, r in rows:
        text = f"{n}\t{'empty' if r is None else r}"
        _emit({"length": n, **_range_obj(r)}, args.json, text)
    return EXIT_OK


def cmd_gaps(args) -> int:
    g = gaps(args.z, args.m)
    _emit({"z": args.z, "m": args.m, "gaps": g}, args.json, ", ".join(map(str, g)))
    return EXIT_OK


def cmd_extrema(args) -> int:
    z, m = args.z, args.m
    minima, maxima = find_min_max(z, m, args.start, args.stop)
    kinds: dict[int, list[str]] = {}
    for kind, runs in (("maximum", maxima), ("minimum", minima)):
        for run in runs:
            for w in run.locations():
                kinds.setdefault(w, []).append(kind)
    for w in sorted(kinds):
        kind = "/".join(kinds[w])
        value = w * z % m
        _emit({"location": w, "value": value, "kind": kind}, args.json,
              f"{w}\t{value}\t{kind}")
    if args.json:
        print(json.dumps({"minima_runs": [list(r) for r in minima],
                          "maxima_runs": [list(r) for r in maxima]}))
    else:
        print("minima runs: " + ", ".join(str(tuple(r)) for r in minima))
        print("maxima runs: " + ", ".join(str(tuple(r)) for r in maxima))
    return EXIT_OK


def cmd_check(args) -> int:
    ok = oracle_exact(args.w, args.z, args.digits, args.base)
    _emit({"w": args.w, "z": args.z, "digits": args.digits, "base": args.base,
           "exact": ok}, args.json, "exact" if ok else "inexact")
    return EXIT_OK


def audit(r: ValidityRange | None, lb: int, z: int, digits: int, base: int) -> bool:
    """Check a computed range at its edges with the brute-force test."""
    if r is None:
        return not oracle_exact(lb, z, digits, base)
    if oracle_exact(r.ub, z, digits, base):
        return False
    return r.ub - 1 < r.lb or oracle_exact(r.ub - 1, z, digits, base)


def cmd_pow5(args) -> int:
    if args.q is not None:
        q_min = q_max = args.q
    else:
        q_min, q_max = args.q_min, args.q_max
    if q_min is None or q_max is None:
        raise UsageError("pow5 needs --q or both --q-min and --q-max")
    if q_min > q_max:
        raise DomainError("--q-min must not exceed --q-max")
    if not args.bits >= args.digits >= 1:
        raise DomainError("need bits >= digits >= 1")
    status = EXIT_OK
    for q in range(q_min, q_max + 1):
        mult, exponent = pow5_multiplier(q, args.bits)
        query = RangeQuery(mult, args.digits, args.base)
        r = find_range(query)
        lb = (args.base ** (args.digits - 1) + mult - 1) // mult
        if not audit(r, lb, mult, args.digits, args.base):
            print(f"audit failed for q={q}: {r}", file=sys.stderr)
            status = EXIT_AUDIT
        obj = {"q": q, "multiplier": mult, "exponent": exponent, **_range_obj(r)}
        text = f"{q}, empty" if r is None else f"{q}, {r.lb}, {r.ub}"
        _emit(obj, args.json, text)
    return status


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="shortprod",
                description="Exact short products from truncated multipliers.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help):
        sp = sub.add_parser(name, help=help)
        sp.set_defaults(func=func)
        sp.add_argument("--json", action="store_true", help="emit JSON lines")
        return sp

    sp = add("range", cmd_range, "range of w with exact leading digits")
    sp.add_argument("--z", type=int, required=True)
    sp.add_argument("--digits", type=int, required=True)
    sp.add_argument("--base", type=int, default=10)

    sp = add("table", cmd_table, "ranges for successive prefixes of a constant")
    sp.add_argument("--constant", default="pi")
    sp.add_argument("--digits", type=int, default=10)
    sp.add_argument("--base", type=int, default=10)
    sp.add_argument("--from", dest="from_len", type=int, default=10)
    sp.add_argument("--to", dest="to_len", type=int, default=20)

    sp = add("gaps", cmd_gaps, "steps between extrema of (w*z) mod m")
    sp.add_argument("--z", type=int, required=True)
    sp.add_argument("--m", type=int, required=True)

    sp = add("extrema", cmd_extrema, "running extrema of (w*z) mod m over [from, to]")
    sp.add_argument("--z", type=int, required=True)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--from", dest="start", type=int, required=True)
    sp.add_argument("--to", dest="stop", type=int, required=True)

    sp = add("check", cmd_check, "brute-force exactness test for a single w")
    sp.add_argument("--w", type=int, required=True)
    sp.add_argument("--z", type=int, required=True)
    sp.add_argument("--digits", type=int, required=True)
    sp.add_argument("--base", type=int, default=10)

    sp = add("pow5", cmd_pow5, "audit truncated powers of five")
    sp.add_argument("--q", type=int)
    sp.add_argument("--q-min", type=int)
    sp.add_argument("--q-max", type=int)
    sp.add_argument("--bits", type=int, default=128)
    sp.add_argument("--digits", type=int, default=64)
    sp.add_argument("--base", type=int, default=2)
    return p


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as e:
        print(e, file=sys.stderr)
        return EXIT_USAGE
    except DomainError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except SearchCapExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_AUDIT


if __name__ == "__main__":
    sys.exit(main())
