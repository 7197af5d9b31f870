"""Batch command line interface.

Subcommands wrap the library operations one to one; all numeric output is
exact (fraction strings plus a pi power), with an optional clearly labeled
decimal annotation computed from 50 digits of pi.  Exit codes: 0 success,
1 verification failure, 2 domain error, 3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from decimal import Decimal, getcontext
from fractions import Fraction

from .characters import character_cache
from .coverings import (
    CoverCountRecord,
    CoverProfile,
    brute_force_hom_count,
    cov_connected_series,
    cov_d,
)
from .cumulants import c_const, c_simple, elementary_cumulant, volume
from .errors import DomainError, ResourceCapError
from .exact_arith import PiScalar
from .npoint import EvaluatedPoint, verify_theorem1_n1
from .shifted_symmetric import f_top_expansion
from .verify import run_suite

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_DOMAIN = 2
EXIT_RESOURCE = 3


def _parse_int_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok != ""]
    except ValueError as exc:
        raise DomainError(f"expected comma-separated integers, got {text!r}") from exc


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"expected a rational like 5/2, got {text!r}") from exc


def _approx_decimal(value: PiScalar) -> str:
    getcontext().prec = 50
    v = value.approx()
    return str(Decimal(v.numerator) / Decimal(v.denominator))


def _emit(payload: str) -> None:
    sys.stdout.write(payload + "\n")


def _pi_json(value: PiScalar, approx: bool) -> dict:
    data = value.as_json_dict()
    if approx:
        data["approx"] = _approx_decimal(value)
    return data


def cmd_volume(args) -> int:
    result = volume(_parse_int_list(args.mu), cross_check=args.cross_check)
    fmt = args.output or "json"
    if fmt == "json":
        data = result.as_json_dict()
        if args.approx:
            data["volume"]["approx"] = _approx_decimal(result.volume)
        _emit(json.dumps(data))
    elif fmt == "csv":
        _emit("mu;genus;dim;route;volume")
        _emit(
            f"{','.join(map(str, result.mu))};{result.genus};{result.dim};"
            f"{result.route};{result.volume}"
        )
    else:
        line = (
            f"volume H({','.join(map(str, result.mu))}) = {result.volume} "
            f"(genus {result.genus}, dim {result.dim}, route {result.route})"
        )
        if args.approx:
            line += f"  [approx {_approx_decimal(result.volume)}]"
        _emit(line)
    return EXIT_OK


def cmd_cumulant(args) -> int:
    m = _parse_int_list(args.m)
    value = elementary_cumulant(m)
    fmt = args.output or "json"
    if fmt == "json":
        _emit(json.dumps({"m": sorted(m, reverse=True),
                          "value": _pi_json(value, args.approx)}))
    else:
        _emit(f"cumulant({args.m}) = {value}")
    return EXIT_OK


def cmd_cconst(args) -> int:
    m = _parse_int_list(args.m)
    value = c_const(m)
    fmt = args.output or "json"
    if fmt == "json":
        _emit(json.dumps({"m": sorted(m, reverse=True),
                          "c": _pi_json(value, args.approx)}))
    else:
        _emit(f"c({args.m}) = {value}")
    return EXIT_OK


def cmd_fk(args) -> int:
    expansion = f_top_expansion(args.k)
    fmt = args.output or "plain"
    if fmt == "json":
        terms = [
            {"p": list(lam), "coeff": str(coeff)} for lam, coeff in expansion.terms
        ]
        _emit(json.dumps({"k": args.k, "terms": terms}))
    else:
        _emit(str(expansion))
    return EXIT_OK


def cmd_covers(args) -> int:
    profile = CoverProfile(_parse_int_list(args.profile))
    dmax = args.dmax
    if args.use_cache:
        cache = character_cache()
        for d in range(1, dmax + 1):
            cache.load_degree(d)
    records: list[CoverCountRecord] = []
    if args.connected:
        series = cov_connected_series(profile, dmax, threads=args.threads)
        for d in range(1, dmax + 1):
            records.append(
                CoverCountRecord(profile, d, "connected", series.coefficient(d))
            )
    else:
        for d in range(1, dmax + 1):
            records.append(
                CoverCountRecord(profile, d, "all", cov_d(profile, d, threads=args.threads))
            )
    if args.brute_force:
        for d in range(1, dmax + 1):
            records.append(
                CoverCountRecord(
                    profile, d, "brute-" + ("connected" if args.connected else "all"),
                    brute_force_hom_count(profile, d, args.connected),
                )
            )
    if args.use_cache:
        cache = character_cache()
        for d in range(1, dmax + 1):
            cache.save_degree(d)
    fmt = args.output or "csv"
    if fmt == "json":
        _emit(json.dumps([
            {"profile": list(r.profile), "d": r.d, "kind": r.kind, "count": str(r.count)}
            for r in records
        ]))
    else:
        _emit("profile;d;kind;count")
        for r in records:
            _emit(r.csv_row())
    return EXIT_OK


def cmd_simple_table(args) -> int:
    rows = [(n, c_simple(n)) for n in range(1, args.nmax + 1)]
    fmt = args.output or "csv"
    if fmt == "json":
        _emit(json.dumps([
            {"n": n, "c": _pi_json(value, args.approx)} for n, value in rows
        ]))
    else:
        _emit("n;num;den;pi_pow")
        for n, value in rows:
            _emit(f"{n};{value.coeff.numerator};{value.coeff.denominator};{value.pi_pow}")
    return EXIT_OK


def cmd_npoint_check(args) -> int:
    point = EvaluatedPoint(_parse_fraction(args.s))
    ok = verify_theorem1_n1(point, args.order)
    fmt = args.output or "json"
    if fmt == "json":
        _emit(json.dumps({"s": str(point.s), "order": args.order, "verified": ok}))
    else:
        _emit(f"one-point identity at s={point.s}, order {args.order}: "
              + ("ok" if ok else "FAIL"))
    return EXIT_OK if ok else EXIT_VERIFY_FAILED


def cmd_verify(args) -> int:
    results = run_suite(args.suite)
    failed = [r for r in results if not r.passed]
    fmt = args.output or "plain"
    if fmt == "json":
        _emit(json.dumps([
            {"name": r.name, "passed": r.passed, "detail": r.detail}
            for r in results
        ]))
    else:
        for r in results:
            status = "ok  " if r.passed else "FAIL"
            line = f"{status} {r.name}"
            if r.detail and not r.passed:
                line += f"  ({r.detail})"
            _emit(line)
        _emit(f"{len(results) - len(failed)}/{len(results)} properties passed")
    return EXIT_VERIFY_FAILED if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stratavol",
        description="Exact volumes of strata of holomorphic differentials "
        "and weighted counts of torus coverings.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--output", choices=("json", "csv", "plain"), default=None,
        help="output format (each command has a sensible default)",
    )
    common.add_argument(
        "--threads", type=int, default=None,
        help="worker cap for the character-sum reductions",
    )
    common.add_argument(
        "--approx", action="store_true",
        help="append a decimal annotation computed from 50 digits of pi",
    )
    common.add_argument(
        "--use-cache", action="store_true",
        help="load and persist per-degree character tables "
        "(STRATAVOL_CACHE or the per-user cache directory)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("volume", help="exact stratum volume", parents=[common])
    p.add_argument("mu", help="zero multiplicities, e.g. 3,1")
    p.add_argument("--cross-check", action="store_true",
                   help="run both routes when applicable and compare")
    p.set_defaults(fn=cmd_volume)

    p = sub.add_parser("cumulant", parents=[common], help="elementary cumulant of a key")
    p.add_argument("m", help="key entries, e.g. 4,2")
    p.set_defaults(fn=cmd_cumulant)

    p = sub.add_parser("cconst", parents=[common], help="leading covering constant c(m)")
    p.add_argument("m", help="profile entries (each >= 2), e.g. 4,2")
    p.set_defaults(fn=cmd_cconst)

    p = sub.add_parser("fk", parents=[common], help="top-weight power-sum expansion")
    p.add_argument("k", type=int)
    p.set_defaults(fn=cmd_fk)

    p = sub.add_parser("covers", parents=[common], help="covering counts for a profile")
    p.add_argument("profile", help="branch profile, e.g. 2,2")
    p.add_argument("--dmax", type=int, default=5)
    p.add_argument("--connected", action="store_true")
    p.add_argument("--brute-force", action="store_true",
                   help="also tabulate the direct enumeration")
    p.set_defaults(fn=cmd_covers)

    p = sub.add_parser("simple-table", parents=[common], help="constants for simple branching")
    p.add_argument("--nmax", type=int, default=8)
    p.set_defaults(fn=cmd_simple_table)

    p = sub.add_parser("npoint-check", parents=[common], help="one-point theta identity check")
    p.add_argument("--s", required=True, help="rational evaluation point, |s| > 1")
    p.add_argument("--order", type=int, default=30)
    p.set_defaults(fn=cmd_npoint_check)

    p = sub.add_parser("verify", parents=[common], help="run a named verification suite")
    p.add_argument("suite", help="suite name or 'all'")
    p.set_defaults(fn=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except DomainError as exc:
        sys.stderr.write(f"domain error: {exc}\n")
        return EXIT_DOMAIN
    except ResourceCapError as exc:
        sys.stderr.write(f"resource cap: {exc}\n")
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
