"""Command-line front end.

Exit codes partition outcomes: 0 pass, 1 I/O failure, 2 schema/model error,
3 identity failure (report still emitted), 4 non-isolated singularity.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from ..geometry.base import GeometryError
from ..liealg.cartan import LieAlgebraError
from ..liealg.table_a import NM, NO_MATTER, row_selector
from ..localring.invariants import is_weighted_homogeneous, milnor_number, tyurina_number
from ..localring.poly import PolynomialError, parse_polynomial
from ..localring.standard import INFINITE
from ..spectra.engine import evaluate
from ..spectra.model import ModelError
from .report import emit_json, emit_text
from .schema import DocumentError, load_model

EXIT_PASS = 0
EXIT_IO = 1
EXIT_SCHEMA = 2
EXIT_IDENTITY = 3
EXIT_NON_ISOLATED = 4


def _analyze_one(path: str, args) -> int:
    try:
        model = load_model(path)
    except OSError as exc:
        print(f"error: cannot read {path}: {exc}", file=sys.stderr)
        return EXIT_IO
    except DocumentError as exc:
        print(f"error: {path}: {exc}", file=sys.stderr)
        return EXIT_SCHEMA

    if args.variant_rprime:
        model = model.with_(options=model.options.__class__(
            model.options.generic, model.options.abelian_vectors, "Rprime"
        ))
    try:
        report = evaluate(model)
    except (ModelError, GeometryError, LieAlgebraError, PolynomialError) as exc:
        print(f"error: {path}: {exc}", file=sys.stderr)
        return EXIT_SCHEMA

    text = (
        emit_json(report, timestamp=not args.no_timestamp)
        if args.json
        else emit_text(report, timestamp=not args.no_timestamp)
    )
    print(text, end="" if text.endswith("\n") else "\n")
    return EXIT_PASS if report.passed else EXIT_IDENTITY


def cmd_analyze(args) -> int:
    if args.batch:
        directory = Path(args.batch)
        if not directory.is_dir():
            print(f"error: {directory} is not a directory", file=sys.stderr)
            return EXIT_IO
        files = sorted(directory.glob("*.json"))
        if not files:
            print(f"error: no *.json files in {directory}", file=sys.stderr)
            return EXIT_IO
        worst = EXIT_PASS
        for path in files:
            print(f"== {path}")
            worst = max(worst, _analyze_one(str(path), args))
        return worst
    if not args.file:
        print("error: analyze needs a model file or --batch", file=sys.stderr)
        return EXIT_SCHEMA
    return _analyze_one(args.file, args)


def cmd_milnor(args) -> int:
    variables = [v.strip() for v in args.vars.split(",") if v.strip()]
    try:
        poly = parse_polynomial(args.polynomial, variables)
        mu = milnor_number(poly, degree_cap=args.degree_cap)
        tau = tyurina_number(poly, degree_cap=args.degree_cap)
        weights = is_weighted_homogeneous(poly)
    except PolynomialError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SCHEMA
    if mu == INFINITE:
        print("mu = infinite (non-isolated singularity)")
        return EXIT_NON_ISOLATED
    print(f"mu = {mu}")
    print(f"tau = {tau}")
    if weights is None:
        print("weighted homogeneous: no")
    else:
        pretty = ", ".join(str(w) for w in weights)
        print(f"weighted homogeneous: yes  weights = ({pretty})")
    return EXIT_PASS


def cmd_table(args) -> int:
    try:
        row, param = row_selector(args.selector)
    except LieAlgebraError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SCHEMA
    algebra = row.algebra(param)
    expected = row.expected_charged(param)

    def cell_text(cell, computed):
        if cell is None:
            return "-"
        if cell == NO_MATTER:
            return "--"
        if cell == NM:
            return "NM"
        rep = row.resolve(cell, param)
        return f"{rep.label()} [{computed}]"

    def recompute(cell):
        if cell in (None, NO_MATTER):
            return 0 if cell == NO_MATTER else None
        if cell == NM:
            return NM
        value = row.resolve(cell, param).charged_dim()
        return int(value) if value.denominator == 1 else value

    from ..liealg.reps import named_rep

    adj = int(named_rep(algebra, "adj").charged_dim()) if algebra else 0
    got = (adj, recompute(row.rho0) or 0, recompute(row.rho_q1), recompute(row.rho_q2))
    normalized_expected = tuple(
        0 if (e is None and g == 0) else e for e, g in zip(expected, got)
    )
    match = all(
        g == e or (e is None and g is None)
        for g, e in zip(got, normalized_expected)
    )
    print(f"row {row.number}: type {row.kodaira_label(param)}  algebra "
          f"{algebra.physics if algebra else '-'}")
    print(f"  rho0   : {cell_text(row.rho0, got[1])}")
    print(f"  rho_Q1 : {cell_text(row.rho_q1, got[2])}")
    print(f"  rho_Q2 : {cell_text(row.rho_q2, got[3])}")
    stored = tuple("NM" if e == NM else ("-" if e is None else e) for e in expected)
    live = tuple("NM" if g == NM else ("-" if g is None else g) for g in got)
    print(f"  stored charged dims    : {stored}")
    print(f"  recomputed charged dims: {live}")
    print(f"  match: {'yes' if match else 'NO'}")
    return EXIT_PASS if match else EXIT_IDENTITY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fibspec",
        description="Exact gauge-algebra / spectrum / anomaly computations "
        "for declarative elliptic fibration models.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_analyze = sub.add_parser("analyze", help="evaluate a model document")
    p_analyze.add_argument("file", nargs="?", help="model JSON file")
    p_analyze.add_argument("--batch", help="evaluate every *.json in a directory")
    group = p_analyze.add_mutually_exclusive_group()
    group.add_argument("--json", action="store_true", help="emit the JSON report")
    group.add_argument("--text", action="store_true", help="emit the text report (default)")
    p_analyze.add_argument(
        "--variant-rprime", action="store_true", help="force the R' variant"
    )
    p_analyze.add_argument(
        "--no-timestamp", action="store_true", help="suppress the timestamp field"
    )
    p_analyze.set_defaults(func=cmd_analyze)

    p_milnor = sub.add_parser("milnor", help="Milnor/Tyurina numbers of a germ")
    p_milnor.add_argument("--vars", required=True, help="comma-separated variables")
    p_milnor.add_argument("--degree-cap", type=int, default=64)
    p_milnor.add_argument("polynomial", help="polynomial text, e.g. 'z^3+x^2+y^2+w^2'")
    p_milnor.set_defaults(func=cmd_milnor)

    p_table = sub.add_parser("table", help="show a fiber-type table row")
    p_table.add_argument("selector", help="row selector, e.g. 'I5:sp2' or 'II*:e8'")
    p_table.set_defaults(func=cmd_table)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    code = args.func(args)
    sys.exit(code)


if __name__ == "__main__":
    main()
