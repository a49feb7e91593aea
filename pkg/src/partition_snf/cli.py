"""Command line front end.

Subcommands: ``weights`` (the extended-diagram grid of weight
polynomials), ``snf`` (either or both reductions, optionally on a border
rectangle), ``recurrence`` (row coefficients and residuals), ``qcatalan``
(the q-analog table with normal-form exponent checks), and ``selftest``
(the exhaustive property suites).

Exit codes: 0 success, 1 usage or input errors, 2 verification failures.
Output is deterministic; ``--format json`` wraps results in an envelope
echoing the parsed input.
"""

from __future__ import annotations

import argparse
import json
import sys

from .checks import CHECK_NAMES, run_selftest
from .errors import PartitionSnfError, VerificationFailed
from .partitions import Cell, Partition, parse_partition
from .polynomials import (
    Polynomial,
    UniPoly,
    letter_naming,
    polynomial_to_json,
    render,
)
from .qcatalan import (
    expected_snf_exponents,
    q_catalan_table,
    staircase_snf_diagonal,
)
from .recurrence import alternating_row_sum, row_coefficients
from .snf import SnfResult, snf_inductive, snf_recurrence, verify_snf
from .weights import (
    leading_monomial,
    rect_weight_matrix,
    square_matrix,
    weight_polynomial,
)

__all__ = ["build_parser", "main", "run"]


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def build_parser() -> _Parser:
    parser = _Parser(
        prog="partition-snf",
        description="Weight matrices of partitions and their exact normal forms.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument(
            "--format", choices=("text", "json"), default="text", help="output format"
        )
        sp.add_argument("--out", metavar="FILE", help="write output to FILE")

    w = sub.add_parser("weights", help="weight polynomial of every extended cell")
    w.add_argument("partition", help="comma-separated parts; empty string allowed")
    w.add_argument("--naming", choices=("letters", "coords"), default="coords")
    common(w)

    s = sub.add_parser("snf", help="normal form with explicit transforms")
    s.add_argument("partition")
    s.add_argument(
        "--algorithm", choices=("recurrence", "inductive", "both"), default="both"
    )
    s.add_argument(
        "--rect",
        nargs=2,
        type=int,
        metavar=("D", "E"),
        help="reduce the DxE border rectangle instead of the origin square",
    )
    s.add_argument("--naming", choices=("letters", "coords"), default="coords")
    common(s)

    r = sub.add_parser("recurrence", help="row coefficients and residuals")
    r.add_argument("partition")
    r.add_argument("--j", default="all", help="column index or 'all'")
    r.add_argument("--naming", choices=("letters", "coords"), default="coords")
    common(r)

    q = sub.add_parser("qcatalan", help="q-analog table with normal-form checks")
    q.add_argument("n_max", type=int)
    common(q)

    t = sub.add_parser("selftest", help="exhaustive identity suites")
    t.add_argument("max_size", type=int)
    common(t)

    return parser


def _naming_for(lam: Partition, mode: str):
    return letter_naming(lam.cells()) if mode == "letters" else None


def _matrix_lines(matrix, naming) -> list[str]:
    return [
        "  " + " | ".join(render(entry, naming) for entry in row)
        for row in matrix.entries
    ]


def _cmd_weights(args):
    lam = parse_partition(args.partition)
    naming = _naming_for(lam, args.naming)
    ext = lam.extended
    lines = [f"partition: {lam}"]
    cells_payload = []
    for r, length in enumerate(ext.row_lengths, start=1):
        for c in range(1, length + 1):
            cell = Cell(r, c)
            poly = weight_polynomial(lam, cell)
            text = render(poly, naming)
            lines.append(f"({r},{c}) {text}")
            cells_payload.append(
                {
                    "cell": [r, c],
                    "border": cell in ext.border,
                    "text": text,
                    "polynomial": polynomial_to_json(poly),
                }
            )
    envelope = {
        "command": "weights",
        "input": {
            "partition": list(lam.parts),
            "naming": args.naming,
            "format": args.format,
        },
        "result": {"row_lengths": list(ext.row_lengths), "cells": cells_payload},
    }
    return "\n".join(lines), envelope, 0


def _snf_block(lam, result: SnfResult, W, naming) -> tuple[list[str], dict, bool]:
    ok, _ = verify_snf(W, result)
    lines = [
        f"algorithm: {result.algorithm}",
        f"verified: {'true' if ok else 'false'}",
        "diagonal: " + " | ".join(render(p, naming) for p in result.diagonal),
        "P:",
        *_matrix_lines(result.P, naming),
        "Q:",
        *_matrix_lines(result.Q, naming),
    ]
    return lines, result.to_json(), ok


def _cmd_snf(args):
    lam = parse_partition(args.partition)
    naming = _naming_for(lam, args.naming)
    if args.rect is not None and args.algorithm != "inductive":
        raise _UsageError("--rect requires --algorithm inductive")
    lines = [f"partition: {lam}"]
    payload: dict = {}
    code = 0
    if args.rect is not None:
        d, e = args.rect
        result = snf_inductive(lam, d, e)
        W = rect_weight_matrix(lam, d, e)
        block, block_json, ok = _snf_block(lam, result, W, naming)
        lines += [f"rectangle: {d}x{e}", *block]
        payload = block_json
        if not ok:
            code = 2
    else:
        W = square_matrix(lam, Cell(1, 1))
        algorithms = (
            ("recurrence", "inductive")
            if args.algorithm == "both"
            else (args.algorithm,)
        )
        results = []
        for name in algorithms:
            if name == "recurrence":
                result = snf_recurrence(lam)
            else:
                side = lam.rank + 1
                result = snf_inductive(lam, side, side)
            block, block_json, ok = _snf_block(lam, result, W, naming)
            lines += block
            results.append((name, result, block_json))
            if not ok:
                code = 2
        if len(results) == 2:
            agree = results[0][1].diagonal == results[1][1].diagonal
            lines.append(f"agree: {'true' if agree else 'false'}")
            payload = {
                "recurrence": results[0][2],
                "inductive": results[1][2],
                "agree": agree,
            }
            if not agree:
                code = 2
        else:
            payload = results[0][2]
    envelope = {
        "command": "snf",
        "input": {
            "partition": list(lam.parts),
            "algorithm": args.algorithm,
            "rect": list(args.rect) if args.rect is not None else None,
            "naming": args.naming,
            "format": args.format,
        },
        "result": payload,
        "verified": code == 0,
    }
    return "\n".join(lines), envelope, code


def _cmd_recurrence(args):
    lam = parse_partition(args.partition)
    naming = _naming_for(lam, args.naming)
    if args.j == "all":
        columns = list(range(1, lam.rank + 2))
    else:
        try:
            columns = [int(args.j)]
        except ValueError:
            raise _UsageError(f"--j must be an integer or 'all', got {args.j!r}")
    family = row_coefficients(lam)
    lines = [f"partition: {lam}"]
    for i, coeff in enumerate(family.coefficients):
        lines.append(f"coefficient[{i}] = {render(coeff, naming)}")
    origin_monomial = leading_monomial(lam, Cell(1, 1))
    checks = []
    code = 0
    for j in columns:
        residual = alternating_row_sum(lam, j)
        expected = origin_monomial if j == 1 else Polynomial.zero()
        ok = residual == expected
        if not ok:
            code = 2
        lines.append(
            f"j={j}: residual {render(residual, naming)}, "
            f"expected {render(expected, naming)}, {'ok' if ok else 'FAIL'}"
        )
        checks.append(
            {
                "j": j,
                "residual": polynomial_to_json(residual),
                "expected": polynomial_to_json(expected),
                "ok": ok,
            }
        )
    envelope = {
        "command": "recurrence",
        "input": {
            "partition": list(lam.parts),
            "j": args.j,
            "naming": args.naming,
            "format": args.format,
        },
        "result": {
            "coefficients": [polynomial_to_json(c) for c in family.coefficients],
            "checks": checks,
        },
        "verified": code == 0,
    }
    return "\n".join(lines), envelope, code


def _cmd_qcatalan(args):
    if args.n_max < 0:
        raise _UsageError("n_max must be nonnegative")
    lines = []
    rows = []
    code = 0
    table = q_catalan_table(args.n_max)
    for n, poly in enumerate(table):
        if n == 0:
            lines.append(f"n=0 {poly.render()}")
            rows.append({"n": 0, "poly": list(poly.coeffs), "rendered": poly.render()})
            continue
        exponents = expected_snf_exponents(n)
        actual = staircase_snf_diagonal(n)
        ok = len(actual) == len(exponents) and all(
            entry == UniPoly.monomial(k) for entry, k in zip(actual, exponents)
        )
        if not ok:
            code = 2
        exp_text = ",".join(str(k) for k in exponents)
        lines.append(
            f"n={n} {poly.render()} exponents={exp_text} {'ok' if ok else 'FAIL'}"
        )
        rows.append(
            {
                "n": n,
                "poly": list(poly.coeffs),
                "rendered": poly.render(),
                "snf_exponents": list(exponents),
                "ok": ok,
            }
        )
    envelope = {
        "command": "qcatalan",
        "input": {"n_max": args.n_max, "format": args.format},
        "result": {"rows": rows},
        "verified": code == 0,
    }
    return "\n".join(lines), envelope, code


def _cmd_selftest(args):
    if args.max_size < 1:
        raise _UsageError("max_size must be at least 1")
    report = run_selftest(args.max_size)
    lines = [f"selftest max_size={args.max_size}"]
    for name in CHECK_NAMES:
        lines.append(f"{name}: {report.counts[name]} checks")
    for failure in report.failures:
        lines.append(f"FAIL {failure}")
    lines.append(
        f"result: {'PASS' if report.ok else 'FAIL'} ({report.total} checks, "
        f"{len(report.failures)} failures)"
    )
    envelope = {
        "command": "selftest",
        "input": {"max_size": args.max_size, "format": args.format},
        "result": {"counts": report.counts, "failures": report.failures},
        "verified": report.ok,
    }
    return "\n".join(lines), envelope, 0 if report.ok else 2


_DISPATCH = {
    "weights": _cmd_weights,
    "snf": _cmd_snf,
    "recurrence": _cmd_recurrence,
    "qcatalan": _cmd_qcatalan,
    "selftest": _cmd_selftest,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    try:
        text, envelope, code = _DISPATCH[args.command](args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except VerificationFailed as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return 2
    except PartitionSnfError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    output = text if args.format == "text" else json.dumps(envelope, indent=2)
    if not output.endswith("\n"):
        output += "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(output)
    else:
        sys.stdout.write(output)
    return code


def run() -> None:
    sys.exit(main())
