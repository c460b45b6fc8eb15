"""
Command-line interface for hullcodes.

Usage:
    hullcodes fields --q 16
    hullcodes construct --q 16 --n 10 --k 5 --hull 3 [--format json]
    hullcodes verify --q 16 --n 10 --k 5 --hull 3
    hullcodes verify --input code.json
    hullcodes eaqecc-table --q 16 --n 10
    hullcodes sweep --q 4,8,16 --max-qk 65536

Exit codes: 0 success, 1 verification failure, 2 bad parameters,
3 internal inconsistency between the hull oracles.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from contextlib import contextmanager
from typing import Iterator, TextIO

from .code import DEFAULT_CAP
from .eaqecc import emit_table, format_table
from .errors import HullCodesError, NoApplicableFamily, NotASquare, NoValidOmega, OracleMismatch, ParamOutOfRange
from .field import FieldSpec, field_of_order, prime_factors
from .grs import (
    FAMILIES,
    ConstructionRequest,
    ConstructionResult,
    construct,
    corrupt_last_multiplier,
    run_checks,
)

EXIT_OK, EXIT_VERIFY, EXIT_PARAMS, EXIT_INTERNAL = 0, 1, 2, 3
CAP_ENV = "HULLCODES_CAP"
_BAD_PARAMS = (ParamOutOfRange, NoApplicableFamily, NotASquare, NoValidOmega)


class UsageError(Exception):
    pass


def default_cap() -> int:
    raw = os.environ.get(CAP_ENV)
    if raw is None:
        return DEFAULT_CAP
    try:
        return int(raw, 0)
    except ValueError:
        raise UsageError(f"{CAP_ENV}={raw!r} is not an integer") from None


def _resolve_q(args: argparse.Namespace) -> int:
    if args.q is not None:
        if args.p is not None or args.m is not None:
            raise UsageError("give either --q or --p/--m, not both")
        return args.q
    if args.p is None:
        raise UsageError("--q (or --p with optional --m) is required")
    return args.p ** (args.m or 1)


def _field_text(f: FieldSpec) -> str:
    terms = []
    for i, c in reversed(list(enumerate(f.modulus))):
        if not c:
            continue
        if i == 0:
            terms.append(str(c))
            continue
        mono = "x" if i == 1 else f"x^{i}"
        terms.append(mono if c == 1 else f"{c}{mono}")
    return f"GF({f.q}) = GF({f.p}^{f.m})  modulus {' + '.join(terms)}  primitive {f.primitive_element()}"


def _field_json(f: FieldSpec) -> dict:
    out = f.to_json()
    out.update(q=f.q, primitive=f.primitive_element())
    return out


def _result_text(res: ConstructionResult) -> str:
    f = res.code.field
    lines = [
        f"family      {res.family}",
        f"field       {_field_text(f)}",
        f"length      n = {res.code.n}",
        f"dimension   k = {res.code.k}",
        f"s           {res.s_used}",
        f"extended    {str(res.spec.extended).lower()}",
        f"points      {list(res.spec.points)}",
        f"multipliers {list(res.spec.multipliers)}",
        "generator",
    ]
    lines += ["  " + " ".join(str(x) for x in row) for row in res.code.G.entries]
    status = "verified" if res.verified else "unverified"
    lines.append(f"hull_dim    {res.requested_l} ({status})")
    return "\n".join(lines) + "\n"


@contextmanager
def _output(path: str | None) -> Iterator[TextIO]:
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w") as fh:
            yield fh


def _dump_json(obj, out: TextIO) -> None:
    out.write(json.dumps(obj, sort_keys=False) + "\n")


# --- subcommands ---


def cmd_fields(args: argparse.Namespace) -> int:
    qs = list(args.q or [])
    if args.max_q:
        qs += [q for q in range(2, args.max_q + 1) if len(prime_factors(q)) == 1]
    if not qs:
        raise UsageError("give --q (repeatable) or --max-q")
    fields = [field_of_order(q) for q in qs]
    with _output(args.output) as out:
        if args.format == "json":
            _dump_json([_field_json(f) for f in fields], out)
        else:
            for f in fields:
                out.write(_field_text(f) + "\n")
    return EXIT_OK


def _request(args: argparse.Namespace) -> ConstructionRequest:
    if args.family != "auto" and args.family not in FAMILIES:
        raise UsageError(f"unknown family {args.family!r}; valid: auto, {', '.join(FAMILIES)}")
    for name in ("n", "k", "hull"):
        if getattr(args, name) is None:
            raise UsageError(f"--{name} is required")
    return ConstructionRequest(_resolve_q(args), args.n, args.k, args.hull, args.family)


def cmd_construct(args: argparse.Namespace) -> int:
    res = construct(_request(args), verify=not args.no_verify)
    with _output(args.output) as out:
        if args.format == "json":
            _dump_json(res.to_json(), out)
        else:
            out.write(_result_text(res))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    if args.input:
        try:
            with open(args.input) as fh:
                res = ConstructionResult.from_json(fh.read())
        except (OSError, ValueError, KeyError, TypeError) as exc:
            raise UsageError(f"cannot load {args.input}: {exc}") from None
    else:
        res = construct(_request(args), verify=False)
    cap = args.cap if args.cap is not None else default_cap()
    checks = run_checks(res, cap=cap, samples=args.samples, seed=args.seed)
    failed = [c for c in checks if not c.passed]
    with _output(args.output) as out:
        if args.format == "json":
            _dump_json(
                {
                    "family": res.family,
                    "q": res.code.field.q,
                    "n": res.code.n,
                    "k": res.code.k,
                    "hull_dim": res.requested_l,
                    "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in checks],
                    "passed": not failed,
                },
                out,
            )
        else:
            out.write(f"{res.family} q={res.code.field.q} n={res.code.n} k={res.code.k} hull={res.requested_l}\n")
            for c in checks:
                out.write(f"{'PASS' if c.passed else 'FAIL'} {c.name}: {c.detail}\n")
    if failed:
        print(f"verification failed: {failed[0].name}", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def cmd_eaqecc_table(args: argparse.Namespace) -> int:
    if args.family != "auto" and args.family not in FAMILIES:
        raise UsageError(f"unknown family {args.family!r}; valid: auto, {', '.join(FAMILIES)}")
    if args.n is None:
        raise UsageError("--n is required")
    q = _resolve_q(args)
    rows = emit_table(q, args.n, args.family, verify=not args.no_verify)
    with _output(args.output) as out:
        if args.format == "json":
            _dump_json({"q": q, "n": args.n, "family": args.family, "rows": [r.to_json() for r in rows]}, out)
        else:
            out.write(format_table(rows))
    return EXIT_OK


def _int_list(text: str) -> list[int]:
    return [int(x) for x in text.replace(" ", "").split(",") if x]


def cmd_sweep(args: argparse.Namespace) -> int:
    if args.family not in ("auto", "all") and args.family not in FAMILIES:
        raise UsageError(f"unknown family {args.family!r}; valid: auto, all, {', '.join(FAMILIES)}")
    families = FAMILIES if args.family == "all" else (args.family,)
    qs = [q for chunk in (args.q or []) for q in _int_list(chunk)]
    cap = args.cap if args.cap is not None else default_cap()
    started = time.perf_counter()
    lines, failures = [], []
    total = 0
    for fam in families:
        for q in qs:
            for n in range(2, min(args.max_n, q + 1) + 1):
                for k in range(2, min(args.max_k, n // 2) + 1):
                    if q**k > args.max_qk:
                        continue
                    cells = []
                    for l in range(1, k + 1):
                        try:
                            res = construct(ConstructionRequest(q, n, k, l, fam), verify=False)
                        except _BAD_PARAMS:
                            cells.append("-")
                            continue
                        if args.corrupt:
                            res = corrupt_last_multiplier(res)
                        total += 1
                        checks = run_checks(res, cap=cap, samples=args.samples, seed=args.seed)
                        bad = [c.name for c in checks if not c.passed]
                        if bad:
                            failures.append(f"q={q} n={n} k={k} l={l} {res.family}: {', '.join(bad)}")
                        cells.append("FAIL" if bad else "ok")
                    if any(c != "-" for c in cells):
                        row = " ".join(f"l={l}:{c}" for l, c in enumerate(cells, 1))
                        lines.append(f"{fam:<18} q={q:<3} n={n:<3} k={k:<2} {row}")
    with _output(args.output) as out:
        for line in lines:
            out.write(line + "\n")
        for fail in failures:
            out.write(f"FAIL {fail}\n")
        out.write(f"{total} instances, {len(failures)} failures\n")
    print(f"sweep time {time.perf_counter() - started:.2f}s", file=sys.stderr)
    return EXIT_VERIFY if failures else EXIT_OK


# --- argument parsing ---


def _add_field_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--q", type=int, help="field order (prime power)")
    p.add_argument("--p", type=int, help="characteristic, alternative to --q")
    p.add_argument("--m", type=int, help="extension degree used with --p")


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--output", "-o", help="write to this file instead of standard output")


def _add_code_args(p: argparse.ArgumentParser) -> None:
    _add_field_args(p)
    p.add_argument("--n", type=int, help="code length")
    p.add_argument("--k", type=int, help="code dimension")
    p.add_argument("--hull", type=int, help="target hull dimension")
    p.add_argument("--family", default="auto", help=f"auto or one of: {', '.join(FAMILIES)}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hullcodes",
        description="MDS GRS codes with prescribed Euclidean hull dimension and their EAQECC parameters.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fields", help="show canonical field descriptors")
    p.add_argument("--q", type=int, action="append", help="field order (repeatable)")
    p.add_argument("--max-q", type=int, help="list every field with q <= this bound")
    _add_common(p)
    p.set_defaults(func=cmd_fields)

    p = sub.add_parser("construct", help="build a code with the requested hull dimension")
    _add_code_args(p)
    p.add_argument("--no-verify", action="store_true", help="skip the hull oracles")
    _add_common(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="construct and run every independent check")
    _add_code_args(p)
    p.add_argument("--input", help="construct JSON to verify instead of re-constructing")
    p.add_argument("--cap", type=int, help=f"distance enumeration cap (default ${CAP_ENV} or {DEFAULT_CAP})")
    p.add_argument("--samples", type=int, default=100, help="sampled messages when q^k > 4096")
    p.add_argument("--seed", type=int, default=0)
    _add_common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("eaqecc-table", help="emit EAQECC parameter table from verified codes")
    _add_field_args(p)
    p.add_argument("--n", type=int, help="code length")
    p.add_argument("--family", default="auto")
    p.add_argument("--no-verify", action="store_true")
    _add_common(p)
    p.set_defaults(func=cmd_eaqecc_table)

    p = sub.add_parser("sweep", help="construct and verify across a parameter grid")
    p.add_argument("--q", action="append", help="comma-separated field orders (repeatable)")
    p.add_argument("--max-n", type=int, default=20)
    p.add_argument("--max-k", type=int, default=8)
    p.add_argument("--max-qk", type=int, default=2**16, help="skip (q, k) with q^k above this")
    p.add_argument("--family", default="auto", help="auto, all, or a single family")
    p.add_argument("--cap", type=int)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--corrupt", action="store_true", help=argparse.SUPPRESS)
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARAMS
    except OracleMismatch as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except _BAD_PARAMS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARAMS
    except HullCodesError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARAMS


if __name__ == "__main__":
    sys.exit(main())
