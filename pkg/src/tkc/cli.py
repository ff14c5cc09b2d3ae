"""Command line front end.

Subcommands: invariants (one knot), nxy (genus function with its trace),
cf (expansion and convergents), sum (connected sums), sweep (bulk reports to
a file), verify (identity suites).  Exit codes: 0 success, 1 usage or input
error, 2 verification failure.  All numbers in JSON output are decimal
strings so arbitrarily large values survive any consumer.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from tkc.bredon_wood import n_genus, skip_trace
from tkc.continued_fraction import convergents, expand
from tkc.exact_arith import gcd
from tkc.torus_knot import (
    InvariantReport,
    TorusKnot,
    Unknot,
    connected_sum_crosscap,
    crosscap,
    invariants,
    normalize,
)
from tkc.verification import DEFAULT_K_MAX, DEFAULT_K_MIN, SUITES, run_suite

CSV_FIELDS = ("p", "q", "parity", "type", "witness_x",
              "crosscap", "boundary_slope", "genus", "gamma", "upper_bound")


class CliError(Exception):
    """Bad usage or bad input; rendered to stderr with exit code 1."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit(2); keep 2 for verification
        raise CliError(message)


def output_record(report: InvariantReport) -> dict[str, str]:
    """The flat, all-string record used by csv and json renderings."""
    knot = report.knot
    cls = report.classification
    if isinstance(knot, Unknot):
        p, q = 1, 1
    else:
        p, q = knot.p, knot.q
    return {
        "p": str(p),
        "q": str(q),
        "parity": cls.parity,
        "type": cls.kind if cls.kind in ("A", "B") else "-",
        "witness_x": str(cls.witness) if cls.witness is not None else "-",
        "crosscap": str(report.crosscap),
        "boundary_slope": str(report.boundary_slope),
        "genus": str(report.genus),
        "gamma": str(report.gamma),
        "upper_bound": str(report.upper_bound),
    }


def _render_text(report: InvariantReport) -> str:
    rec = output_record(report)
    name = "unknot" if isinstance(report.knot, Unknot) else str(report.knot)
    fields = " ".join(f"{k}={rec[k]}" for k in CSV_FIELDS[2:])
    note = " (upper_bound floored from a half-integer)" if report.bound_floored else ""
    return f"{name}: {fields}{note}"


def _render_csv(rows: list[dict[str, str]]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


def _parse_pair(text: str) -> tuple[int, int]:
    try:
        left, right = text.split(":")
        return int(left), int(right)
    except ValueError:
        raise CliError(f"expected a p:q pair, got {text!r}") from None


def cmd_invariants(args) -> int:
    report = invariants(normalize(args.p, args.q))
    if args.format == "text":
        print(_render_text(report))
    elif args.format == "csv":
        print(_render_csv([output_record(report)]), end="")
    else:
        record = {"input": {"p": str(args.p), "q": str(args.q)}}
        record.update(output_record(report))
        print(json.dumps(record, indent=2))
    return 0


def cmd_nxy(args) -> int:
    value = n_genus(args.x, args.y)  # raises with the parity message on odd x
    trace = skip_trace(expand(args.x, args.y))
    print(f"x/y = {args.x}/{args.y}")
    print(f"cf = {trace.source}")
    print(f"b = [{','.join(str(b) for b in trace.b)}]")
    print(f"sigma = {trace.sigma}")
    print(f"N({args.x},{args.y}) = {value}")
    return 0


def cmd_cf(args) -> int:
    if args.x < 1 or args.y < 1:
        raise CliError("cf needs positive integers")
    table = convergents(expand(args.x, args.y))
    print(f"{args.x}/{args.y} = {table.source}")
    for i, a in enumerate(table.source.terms):
        print(f"i={i} a={a} convergent={table.numerators[i]}/{table.denominators[i]}")
    return 0


def cmd_sum(args) -> int:
    knots = []
    for pair in args.pairs:
        p, q = _parse_pair(pair)
        knots.append(normalize(p, q))
    for pair, knot in zip(args.pairs, knots):
        name = "unknot" if isinstance(knot, Unknot) else str(knot)
        print(f"{pair} -> {name}: crosscap {crosscap(knot)}")
    print(f"total: {connected_sum_crosscap(knots)}")
    return 0


def _sweep_records(max_p: int, max_q: int) -> list[dict[str, str]]:
    knots = set()
    for a in range(2, max_p + 1):
        for b in range(2, max_q + 1):
            if gcd(a, b) != 1:
                continue
            knot = normalize(a, b)
            if isinstance(knot, TorusKnot):
                knots.add(knot)
    return [output_record(invariants(k)) for k in sorted(knots)]


def cmd_sweep(args) -> int:
    if args.max_p < 2 or args.max_q < 2:
        raise CliError("sweep bounds must be >= 2")
    records = _sweep_records(args.max_p, args.max_q)
    if args.format == "csv":
        payload = _render_csv(records)
    else:
        payload = json.dumps(records, indent=2) + "\n"
    try:
        with open(args.out, "w", encoding="utf-8", newline="") as handle:
            handle.write(payload)
    except OSError as exc:
        raise CliError(f"cannot write {args.out}: {exc}") from exc
    print(f"wrote {len(records)} records to {args.out}")
    return 0


def cmd_verify(args) -> int:
    if args.suite not in SUITES:
        raise CliError(f"unknown suite {args.suite!r}; choose from {', '.join(SUITES)}")
    report = run_suite(args.suite, args.max_p, DEFAULT_K_MIN, DEFAULT_K_MAX)
    for part in report.parts or (report,):
        status = "PASS" if part.passed else "FAIL"
        print(f"[{part.suite}] max_p={part.max_p} cases={part.cases} "
              f"failures={len(part.failures)} skipped={part.skipped} {status}")
    for failure in report.failures:
        print(f"  {failure}")
    if report.parts:
        print(f"total: cases={report.cases} failures={len(report.failures)} "
              f"{'PASS' if report.passed else 'FAIL'}")
    return 0 if report.passed else 2


def build_parser() -> _Parser:
    parser = _Parser(prog="tkc", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p_inv = sub.add_parser("invariants", help="invariant report for one torus knot")
    p_inv.add_argument("p", type=int)
    p_inv.add_argument("q", type=int)
    p_inv.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p_inv.set_defaults(func=cmd_invariants)

    p_nxy = sub.add_parser("nxy", help="genus function N(x,y) with its skip trace")
    p_nxy.add_argument("x", type=int)
    p_nxy.add_argument("y", type=int)
    p_nxy.set_defaults(func=cmd_nxy)

    p_cf = sub.add_parser("cf", help="canonical continued fraction and convergents")
    p_cf.add_argument("x", type=int)
    p_cf.add_argument("y", type=int)
    p_cf.set_defaults(func=cmd_cf)

    p_sum = sub.add_parser("sum", help="crosscap of a connected sum of torus knots")
    p_sum.add_argument("pairs", nargs="+", metavar="p:q")
    p_sum.set_defaults(func=cmd_sum)

    p_sweep = sub.add_parser("sweep", help="bulk invariant records to a file")
    p_sweep.add_argument("--max-p", type=int, required=True)
    p_sweep.add_argument("--max-q", type=int, required=True)
    p_sweep.add_argument("--out", required=True)
    p_sweep.add_argument("--format", choices=("csv", "json"), default="csv")
    p_sweep.set_defaults(func=cmd_sweep)

    p_verify = sub.add_parser("verify", help="run an identity-verification suite")
    p_verify.add_argument("--suite", required=True)
    p_verify.add_argument("--max-p", type=int, required=True)
    p_verify.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
