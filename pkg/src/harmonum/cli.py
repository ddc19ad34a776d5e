"""Command-line surface: compute values, run verification sweeps, emit
tables, and compare against reference tables.

Exit codes: 0 all checks passed, 1 a mathematical verification failed,
2 usage or parse error.  Output is deterministic: identical invocations
produce byte-identical output.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction

from . import identities, series
from .exact import (
    LamPoly,
    NonDivisibleError,
    format_rational,
    format_value,
    parse_lambda_poly,
    parse_rational,
)
from .sequences import Kind, table

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2

_KIND_CHOICES = tuple(k.value for k in Kind)

_GRID_CHECKS_MN = {
    identities.DERANGEMENT_RECURRENCE: identities.derangement_recurrence_check,
    identities.HARMONIC_RECURRENCE: identities.harmonic_recurrence_check,
    identities.DEG_HARMONIC_RECURRENCE: identities.degenerate_harmonic_recurrence_check,
}
_GRID_CHECKS_NM = {
    identities.HYPERHARMONIC_CLOSED_FORM: identities.hyperharmonic_closed_form_check,
    identities.HYPERHARMONIC_SUM: identities.hyperharmonic_sum_check,
    identities.DEG_HYPERHARMONIC_CLOSED_FORM: identities.degenerate_hyperharmonic_closed_form_check,
    identities.DEG_HYPERHARMONIC_SUM: identities.degenerate_hyperharmonic_sum_check,
}
_GF_CHECKS_PLAIN = {
    series.GF_DERANGEMENT: (series.gf_derangement_check, series.DEFAULT_ORDER_RAT),
    series.GF_HARMONIC: (series.gf_harmonic_check, series.DEFAULT_ORDER_RAT),
    series.GF_DEG_HARMONIC: (series.gf_deg_harmonic_check, series.DEFAULT_ORDER_POLY),
}
_GF_CHECKS_R = {
    series.GF_HYPERHARMONIC: (series.gf_hyperharmonic_check, series.DEFAULT_ORDER_RAT),
    series.GF_DEG_HYPERHARMONIC: (
        series.gf_deg_hyperharmonic_check,
        series.DEFAULT_ORDER_POLY,
    ),
}
_BIVARIATE_CHECKS = {
    series.BIVARIATE_DERANGEMENT: (
        series.bivariate_derangement_check,
        series.DEFAULT_ORDER_RAT_XY,
    ),
    series.BIVARIATE_HARMONIC: (
        series.bivariate_harmonic_check,
        series.DEFAULT_ORDER_RAT_XY,
    ),
    series.BIVARIATE_DEG_HARMONIC: (
        series.bivariate_deg_harmonic_check,
        series.DEFAULT_ORDER_POLY_XY,
    ),
}

IDENTITY_CHOICES = (
    *_GRID_CHECKS_MN,
    *_GRID_CHECKS_NM,
    identities.DEG_LOG_PRODUCT,
    *_GF_CHECKS_PLAIN,
    *_GF_CHECKS_R,
    *_BIVARIATE_CHECKS,
    "all",
)


def _nonneg_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="harmonum",
        description=(
            "Exact derangement, harmonic, hyperharmonic and deformed "
            "harmonic numbers, with mechanical identity verification."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="print one exact value")
    p.add_argument("kind", choices=_KIND_CHOICES)
    p.add_argument("n", type=_nonneg_int)
    p.add_argument("--r", type=_nonneg_int, default=None,
                   help="iteration order (hyperharmonic kinds only)")
    p.add_argument("--lambda", dest="lam", default=None, metavar="P/Q",
                   help="evaluate a deformed kind at an exact rational")

    p = sub.add_parser("verify", help="run an identity over a parameter grid")
    p.add_argument("identity", choices=IDENTITY_CHOICES)
    p.add_argument("--m-max", type=_nonneg_int, default=10)
    p.add_argument("--n-max", type=_nonneg_int, default=10)
    p.add_argument("--r-max", type=_nonneg_int, default=3)
    p.add_argument("--order", type=_nonneg_int, default=None,
                   help="series truncation order (defaults per check)")
    p.add_argument("--count", type=_nonneg_int, default=50,
                   help="number of random product-rule cases")
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("table", help="emit a table of exact values")
    p.add_argument("kind", choices=_KIND_CHOICES)
    p.add_argument("n_max", type=_nonneg_int)
    p.add_argument("--r", type=_nonneg_int, default=None)
    p.add_argument("--format", dest="fmt", choices=("csv", "json"), default="csv")

    p = sub.add_parser(
        "check-reference",
        help="recompute every row of a reference CSV and compare exactly",
    )
    p.add_argument("path")

    return parser


# -- compute -----------------------------------------------------------------


def _resolve_kind_args(parser: argparse.ArgumentParser, args) -> tuple[Kind, int | None]:
    kind = Kind(args.kind)
    if kind.takes_order:
        if args.r is None:
            parser.error(f"kind {kind.value} requires --r")
    elif args.r is not None:
        parser.error(f"kind {kind.value} does not take --r")
    return kind, args.r


def _cmd_compute(parser: argparse.ArgumentParser, args) -> int:
    kind, r = _resolve_kind_args(parser, args)
    if args.lam is not None and not kind.symbolic:
        parser.error(f"kind {kind.value} does not take --lambda")
    value = table(kind, args.n, r)[args.n]
    if args.lam is not None:
        try:
            point = parse_rational(args.lam)
        except ValueError as exc:
            parser.error(str(exc))
        value = value.evaluate(point)
    print(format_value(value))
    return EXIT_OK


# -- verify ------------------------------------------------------------------


def _reports_for(args, identity: str) -> list[identities.CheckReport]:
    reports = []
    if identity in _GRID_CHECKS_MN:
        check = _GRID_CHECKS_MN[identity]
        for m in range(args.m_max + 1):
            for n in range(args.n_max + 1):
                reports.append(check(m, n))
    elif identity in _GRID_CHECKS_NM:
        check = _GRID_CHECKS_NM[identity]
        for n in range(args.n_max + 1):
            for m in range(args.m_max + 1):
                try:
                    reports.append(check(n, m))
                except NonDivisibleError as exc:
                    reports.append(
                        identities.CheckReport(
                            identity,
                            (("n", n), ("m", m)),
                            f"non-divisible: {exc}",
                            "exact quotient",
                            False,
                        )
                    )
    elif identity == identities.DEG_LOG_PRODUCT:
        for x, y, lam in identities.random_log_product_cases(args.count, args.seed):
            reports.append(identities.deg_log_product_check(x, y, lam))
    elif identity in _GF_CHECKS_PLAIN:
        check, default_order = _GF_CHECKS_PLAIN[identity]
        reports.append(check(args.order if args.order is not None else default_order))
    elif identity in _GF_CHECKS_R:
        check, default_order = _GF_CHECKS_R[identity]
        order = args.order if args.order is not None else default_order
        for r in range(args.r_max + 1):
            reports.append(check(order, r))
    elif identity in _BIVARIATE_CHECKS:
        check, default_order = _BIVARIATE_CHECKS[identity]
        reports.append(check(args.order if args.order is not None else default_order))
    else:
        raise ValueError(f"unknown identity {identity!r}")
    return reports


def _cmd_verify(parser: argparse.ArgumentParser, args) -> int:
    if args.identity == "all":
        names = [name for name in IDENTITY_CHOICES if name != "all"]
    else:
        names = [args.identity]
    reports = []
    for name in names:
        reports.extend(_reports_for(args, name))
    failures = [r for r in reports if not r.passed]
    for failure in sorted(failures, key=lambda r: (r.identity, r.params)):
        print(failure.line())
    print(f"checked {len(reports)}, failed {len(failures)}")
    return EXIT_VERIFY_FAILED if failures else EXIT_OK


# -- table -------------------------------------------------------------------


def _cmd_table(parser: argparse.ArgumentParser, args) -> int:
    kind, r = _resolve_kind_args(parser, args)
    values = table(kind, args.n_max, r)
    if args.fmt == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["kind", "n", "r", "value"])
        for n, value in enumerate(values):
            writer.writerow([kind.value, n, "" if r is None else r, format_value(value)])
    else:
        rows = []
        for n, value in enumerate(values):
            row = {"kind": kind.value, "n": n}
            if r is not None:
                row["r"] = r
            row["value"] = format_value(value)
            rows.append(row)
        print(json.dumps(rows, indent=2))
    return EXIT_OK


# -- check-reference -----------------------------------------------------------


class _ReferenceError(Exception):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _parse_reference_row(lineno: int, row: list[str]):
    if len(row) != 4:
        raise _ReferenceError(lineno, f"expected 4 fields, found {len(row)}")
    kind_text, n_text, r_text, value_text = row
    try:
        kind = Kind(kind_text)
    except ValueError:
        raise _ReferenceError(lineno, f"unknown kind {kind_text!r}") from None
    try:
        n = int(n_text)
    except ValueError:
        raise _ReferenceError(lineno, f"bad n {n_text!r}") from None
    if n < 0:
        raise _ReferenceError(lineno, "n must be nonnegative")
    if kind.takes_order:
        try:
            r = int(r_text)
        except ValueError:
            raise _ReferenceError(
                lineno, f"kind {kind.value} requires an integer r, found {r_text!r}"
            ) from None
        if r < 0:
            raise _ReferenceError(lineno, "r must be nonnegative")
    else:
        if r_text != "":
            raise _ReferenceError(
                lineno, f"kind {kind.value} must leave the r column empty"
            )
        r = None
    try:
        if kind.symbolic:
            expected = parse_lambda_poly(value_text)
        else:
            expected = parse_rational(value_text)
            if kind is Kind.DERANGEMENT and expected.denominator != 1:
                raise ValueError("derangement values are integers")
    except ValueError as exc:
        raise _ReferenceError(lineno, f"bad value: {exc}") from None
    return kind, n, r, expected


def _cmd_check_reference(parser: argparse.ArgumentParser, args) -> int:
    try:
        with open(args.path, newline="", encoding="utf-8") as handle:
            reader = csv.reader(handle)
            try:
                header = next(reader)
            except StopIteration:
                raise _ReferenceError(1, "missing header") from None
            if header != ["kind", "n", "r", "value"]:
                raise _ReferenceError(1, f"bad header {header!r}")
            rows = []
            seen = set()
            for lineno, row in enumerate(reader, start=2):
                if not row:
                    continue
                kind, n, r, expected = _parse_reference_row(lineno, row)
                key = (kind, n, r)
                if key in seen:
                    raise _ReferenceError(lineno, f"duplicate row for {key}")
                seen.add(key)
                rows.append((lineno, kind, n, r, expected))
    except OSError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except _ReferenceError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    mismatched = 0
    for lineno, kind, n, r, expected in rows:
        actual = table(kind, n, r)[n]
        if actual != expected:
            mismatched += 1
            where = f"{kind.value} n={n}" + (f" r={r}" if r is not None else "")
            print(
                f"mismatch line {lineno}: {where}: "
                f"expected {format_value(expected)}, computed {format_value(actual)}"
            )
    print(f"checked {len(rows)}, mismatched {mismatched}")
    return EXIT_VERIFY_FAILED if mismatched else EXIT_OK


_COMMANDS = {
    "compute": _cmd_compute,
    "verify": _cmd_verify,
    "table": _cmd_table,
    "check-reference": _cmd_check_reference,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return _COMMANDS[args.command](parser, args)


if __name__ == "__main__":
    sys.exit(main())
