"""Command-line entry point.

Exit codes: 0 success, 1 a verified identity failed, 2 invalid input,
3 resource guard tripped, 4 I/O failure.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

from .dedekind import (
    CoprimePair,
    dedekind_cotangent,
    dedekind_fast,
    dedekind_sawtooth,
    reciprocity_check,
)
from .errors import ConfigurationError, InputError, ResourceGuardError
from .lattice import AxisSimplex, count_lattice_points, ehrhart_interpolate
from .laurent import decompose_constant_term, theorem_coefficient, theorem_coefficients
from .numeric import format_rational

EXIT_OK = 0
EXIT_IDENTITY = 1
EXIT_INPUT = 2
EXIT_GUARD = 3
EXIT_IO = 4

SWEEP_COLUMNS = ("a", "b", "s_ab", "s_ba", "lhs", "rhs", "holds")


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload))
    else:
        print(text)


def _complex_text(z: complex) -> str:
    return f"{z.real:.9f} (im {z.imag:.1e})"


def cmd_dedekind(args) -> int:
    pair = CoprimePair(args.a, args.b)
    if args.method == "cotangent":
        value = dedekind_cotangent(pair)
        _emit(args, {"a": pair.a, "b": pair.b, "method": args.method, "value": value}, f"{value:.10f}")
        return EXIT_OK
    func = dedekind_fast if args.method == "fast" else dedekind_sawtooth
    value = format_rational(func(pair))
    _emit(args, {"a": pair.a, "b": pair.b, "method": args.method, "value": value}, value)
    return EXIT_OK


def cmd_reciprocity(args) -> int:
    report = reciprocity_check(args.a, args.b)
    fields = {
        "a": args.a,
        "b": args.b,
        "s_ab": format_rational(report.s_ab),
        "s_ba": format_rational(report.s_ba),
        "lhs": format_rational(report.lhs),
        "rhs": format_rational(report.rhs),
        "holds": report.holds,
    }
    text = (
        f"s({args.a},{args.b}) = {fields['s_ab']}\n"
        f"s({args.b},{args.a}) = {fields['s_ba']}\n"
        f"lhs = {fields['lhs']}\n"
        f"rhs = {fields['rhs']}\n"
        f"{'HOLDS' if report.holds else 'FAILS'}"
    )
    _emit(args, fields, text)
    return EXIT_OK if report.holds else EXIT_IDENTITY


def cmd_ehrhart(args) -> int:
    simplex = AxisSimplex(args.intercepts)
    base = {"intercepts": list(simplex.intercepts)}
    if args.count is not None:
        count = count_lattice_points(simplex, args.count)
        _emit(args, {**base, "t": args.count, "count": count}, str(count))
        return EXIT_OK
    if args.laurent:
        if args.coeff is not None:
            z = theorem_coefficient(simplex, args.coeff)
            payload = {**base, "m": args.coeff, "re": z.real, "im": z.imag}
            _emit(args, payload, _complex_text(z))
            return EXIT_OK
        zs = theorem_coefficients(simplex)
        payload = {**base, "coefficients": [{"re": z.real, "im": z.imag} for z in zs]}
        _emit(args, payload, "\n".join(f"c_{m} = {_complex_text(z)}" for m, z in enumerate(zs)))
        return EXIT_OK
    poly = ehrhart_interpolate(simplex)
    if args.coeff is not None:
        if not 0 <= args.coeff <= simplex.n:
            raise InputError(f"--coeff must lie in 0..{simplex.n}")
        value = format_rational(poly.coefficient(args.coeff))
        _emit(args, {**base, "m": args.coeff, "value": value}, value)
        return EXIT_OK
    payload = {**base, "coefficients": [format_rational(c) for c in poly.coefficients]}
    _emit(args, payload, str(poly))
    return EXIT_OK


def cmd_decompose(args) -> int:
    dec = decompose_constant_term(args.a, args.b)
    fields = {
        "a": args.a,
        "b": args.b,
        "contrib_a": format_rational(dec.contrib_a),
        "contrib_b": format_rational(dec.contrib_b),
        "contrib_triple": format_rational(dec.contrib_triple),
        "total": format_rational(dec.total),
    }
    text = "\n".join(
        [
            f"contrib_a = {fields['contrib_a']}",
            f"contrib_b = {fields['contrib_b']}",
            f"contrib_triple = {fields['contrib_triple']}",
            f"total = {fields['total']}",
        ]
    )
    _emit(args, fields, text)
    return EXIT_OK if dec.total == 1 else EXIT_IDENTITY


def parse_range(text: str) -> range:
    """``lo..hi`` (inclusive) as a range; hi < lo gives an empty range."""
    try:
        lo, hi = text.split("..")
        return range(int(lo), int(hi) + 1)
    except ValueError:
        raise InputError(f"range must look like 'lo..hi', got {text!r}") from None


def sweep_rows(a_range: range, b_range: range):
    for a in a_range:
        for b in b_range:
            if a < 1 or b < 1 or math.gcd(a, b) != 1:
                continue
            rep = reciprocity_check(a, b)
            yield {
                "a": a,
                "b": b,
                "s_ab": format_rational(rep.s_ab),
                "s_ba": format_rational(rep.s_ba),
                "lhs": format_rational(rep.lhs),
                "rhs": format_rational(rep.rhs),
                "holds": "true" if rep.holds else "false",
            }


def cmd_sweep(args) -> int:
    rows = list(sweep_rows(parse_range(args.a_range), parse_range(args.b_range)))
    failures = sum(row["holds"] != "true" for row in rows)
    if args.json:
        body = json.dumps([{**r, "holds": r["holds"] == "true"} for r in rows])
    else:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=SWEEP_COLUMNS, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        body = buf.getvalue().rstrip("\n")
    if args.out:
        try:
            with open(args.out, "w", newline="") as fh:
                fh.write(body + "\n")
        except OSError as exc:
            print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
            return EXIT_IO
        print(f"{len(rows)} pairs, {failures} failures -> {args.out}", file=sys.stderr)
    else:
        print(body)
    return EXIT_OK if failures == 0 else EXIT_IDENTITY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dedekind-ehrhart",
        description="Dedekind sums, reciprocity and Ehrhart coefficients of lattice simplices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(func=func)
        return p

    p = add("dedekind", cmd_dedekind, "evaluate s(a, b)")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("--method", choices=("sawtooth", "cotangent", "fast"), default="fast")

    p = add("reciprocity", cmd_reciprocity, "check s(a,b) + s(b,a) against the closed form")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)

    p = add("ehrhart", cmd_ehrhart, "Ehrhart polynomial of the axis simplex with given intercepts")
    p.add_argument("intercepts", type=int, nargs="+")
    p.add_argument("--count", type=int, metavar="T", help="brute-force lattice count of the T-th dilate")
    p.add_argument("--coeff", type=int, metavar="M", help="only the coefficient of t^M")
    p.add_argument("--laurent", action="store_true", help="use the coth Laurent-series route")

    p = add("decompose", cmd_decompose, "split c_0 = 1 of the (a, b) triangle into three pieces")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)

    p = add("sweep", cmd_sweep, "reciprocity table over a range of pairs")
    p.add_argument("a_range", help="lo..hi")
    p.add_argument("b_range", help="lo..hi")
    p.add_argument("--out", help="write the table to this file instead of stdout")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, ConfigurationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceGuardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD


if __name__ == "__main__":
    sys.exit(main())
