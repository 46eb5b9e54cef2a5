"""
Command-line entry point `kp`.

Curves are given as Gauss-code files (one curve per line, `#` comments) or as catalog names
prefixed with `@` (`@T3`, `@PF`, ...). Results are printed as JSON.
"""

import argparse
import json
import random
import sys
import time
from collections.abc import Sequence

from .auditor import J_PLUS_QUOTE, AuditReport, run_audit
from .config import SearchBudget, load_budget_config
from .curves.catalog import get_curve
from .curves.curve_core import KnotProjection, read_gauss_file
from .curves.faces import invariant_summary
from .errors import AuditFailure, KnotWorkbenchError, UnseparatedPairError
from .knots.knot_layer import knot_summary
from .moves.moves import MoveSet
from .moves.reduce import ReductionSystem, decide_equiv, reduction_path
from .output import (
    generate_file_csv_for_matrix,
    generate_file_csv_for_table,
    generate_file_excel_for_audit,
    generate_file_json_for_certificates,
    generate_file_json_for_witness,
    generate_file_md_for_audit,
    generate_file_txt_for_corpus,
)
from .search.corpus import cross_check, enumerate_corpus
from .search.macros import untangle
from .search.search import equiv_witness
from .util.configuration import settings
from .util.logger_config import logger


def load_curves(source: str) -> list[KnotProjection]:
    """
    Curves named by a command-line argument.

    Raises:
        FileNotFoundError: If a file argument does not exist
        KeyError: For unknown catalog names
    """
    if source.startswith("@"):
        return [get_curve(source)]
    return read_gauss_file(source)


def load_curve(source: str) -> KnotProjection:
    curves = load_curves(source)
    if not curves:
        raise KnotWorkbenchError(f"no curve in {source}")
    if len(curves) > 1:
        logger.warning(f"{source} holds {len(curves)} curves; using the first")
    return curves[0]


def _print(data) -> None:
    print(json.dumps(data, indent=2, ensure_ascii=False))


def _reflection(args: argparse.Namespace) -> bool:
    if args.reflection is None:
        return settings.KP_ALLOW_REFLECTION
    return args.reflection


def _search_budget(args: argparse.Namespace) -> SearchBudget:
    base = load_budget_config(args.budget).search
    return SearchBudget(
        extra_crossings=base.extra_crossings,
        node_cap=args.node_cap or base.node_cap,
        time_cap=base.time_cap if args.time_cap is None else args.time_cap,
        c_max=args.cap if args.cap is not None else base.c_max,
    )


def command_inv(args: argparse.Namespace) -> int:
    _print([invariant_summary(p) for p in load_curves(args.file)])
    return 0


def command_knot(args: argparse.Namespace) -> int:
    _print([knot_summary(p) for p in load_curves(args.file)])
    return 0


def command_reduce(args: argparse.Namespace) -> int:
    system = ReductionSystem.parse(args.system)
    seed = settings.KP_RANDOM_SEED if args.random and args.seed is None else args.seed
    rng = random.Random(seed) if seed is not None else None
    results = []
    for projection in load_curves(args.file):
        reduced, moves = reduction_path(projection, system, rng)
        results.append(
            {
                "input": projection.key,
                "system": system.value,
                "seed": seed,
                "reduced": reduced.key,
                "reduced_crossings": reduced.crossings,
                "moves": [move.to_dict() for move in moves],
            }
        )
    _print(results)
    return 0


def command_equiv_canon(args: argparse.Namespace) -> int:
    system = ReductionSystem.parse(args.system)
    equal, certificate = decide_equiv(
        load_curve(args.first), load_curve(args.second), system, _reflection(args)
    )
    _print(certificate.to_dict())
    return 0 if equal or not args.strict else 3


def command_equiv(args: argparse.Namespace) -> int:
    moves = MoveSet.parse(args.moves)
    result = equiv_witness(
        load_curve(args.first),
        load_curve(args.second),
        moves,
        _search_budget(args),
        _reflection(args),
    )
    data = result.to_dict()
    if args.output:
        generate_file_json_for_witness(data, args.output)
    _print(data)
    return 0 if result.found else 3


def command_untangle(args: argparse.Namespace) -> int:
    moves = MoveSet.parse(args.moves)
    budget = _search_budget(args)
    results = [
        untangle(projection, moves, budget, _reflection(args)).to_dict()
        for projection in load_curves(args.file)
    ]
    _print(results)
    return 0 if all(result.get("found", True) for result in results) else 3


def command_enumerate(args: argparse.Namespace) -> int:
    reflection = _reflection(args)
    started = time.monotonic()
    limit = load_budget_config(args.budget).corpus_max_crossings
    corpus = enumerate_corpus(args.max_c, reflection, limit)
    summary = {
        "max_c": args.max_c,
        "allow_reflection": reflection,
        "curves": len(corpus),
        "by_crossings": {
            str(c): sum(1 for p in corpus if p.crossings == c) for c in range(args.max_c + 1)
        },
        "elapsed": round(time.monotonic() - started, 2),
    }
    if args.cross_check:
        summary["cross_check"] = cross_check(args.max_c, reflection)
    if args.output:
        generate_file_txt_for_corpus(
            corpus, args.output, header=f"all curves with at most {args.max_c} double points"
        )
    _print(summary)
    return 0


def write_audit_outputs(report: AuditReport, certificates: str | None, report_dir: str | None):
    if certificates:
        generate_file_json_for_certificates(report.store.to_dict(), certificates)
    if not report_dir:
        return
    tables = [table.to_dict() for table in report.tables]
    matrix_rows = report.matrix.to_rows() if report.matrix else None
    for table in tables:
        generate_file_csv_for_table(table, report_dir)
    grid = None
    if report.matrix:
        generate_file_csv_for_matrix(matrix_rows, report_dir)
        grid = ([r.number for r in report.matrix.relations], report.matrix.to_grid())
    generate_file_excel_for_audit(tables, report_dir, matrix_rows, grid)
    generate_file_md_for_audit(report.summary(), tables, report_dir, matrix_rows, J_PLUS_QUOTE)


def command_audit(args: argparse.Namespace) -> int:
    budgets = load_budget_config(args.budget)
    tables = tuple(args.table) if args.table else None
    if tables is None and (args.matrix or args.contracting):
        tables = ()
    if args.all:
        tables, args.matrix, args.contracting = None, True, True
    report = run_audit(
        tables=tables,
        matrix=args.matrix,
        contracting=args.contracting,
        budgets=budgets,
        allow_reflection=_reflection(args),
        reverify=not args.no_reverify,
    )
    write_audit_outputs(report, args.output, args.report_dir or settings.KP_OUTPUT_DIR)
    _print(report.summary())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kp", description="Knot projection workbench: invariants, moves and the audit"
    )
    parser.add_argument("--budget", help="YAML budget file (default: KP_BUDGET_FILE)")
    reflection = parser.add_mutually_exclusive_group()
    reflection.add_argument(
        "--reflection", dest="reflection", action="store_true", default=None,
        help="compare curves up to reflection of the sphere",
    )
    reflection.add_argument(
        "--no-reflection", dest="reflection", action="store_false",
        help="compare curves up to orientation-preserving isotopy only",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    inv = commands.add_parser("inv", help="c, C, Coh^odd, s, |tau| and faces")
    inv.add_argument("file")
    inv.set_defaults(handler=command_inv)

    knot = commands.add_parser("knot", help="Jones of the positive lift, tr, g and W")
    knot.add_argument("file")
    knot.set_defaults(handler=command_knot)

    reduce_parser = commands.add_parser("reduce", help="reduce with one of the seven systems")
    reduce_parser.add_argument("--system", required=True, help="1r, 2r, r, sr, wr, 2sr or 2wr")
    reduce_parser.add_argument("--seed", type=int, help="take random legal sites from this seed")
    reduce_parser.add_argument(
        "--random", action="store_true", help="take random legal sites, seeded by KP_RANDOM_SEED"
    )
    reduce_parser.add_argument("file")
    reduce_parser.set_defaults(handler=command_reduce)

    canon = commands.add_parser("equiv-canon", help="decide equivalence by canonical forms")
    canon.add_argument("--system", required=True)
    canon.add_argument("--strict", action="store_true", help="exit 3 when not equivalent")
    canon.add_argument("first")
    canon.add_argument("second")
    canon.set_defaults(handler=command_equiv_canon)

    for name, handler, help_text in (
        ("equiv", command_equiv, "search for a witness between two curves"),
        ("untangle", command_untangle, "witness from each curve to O"),
    ):
        sub = commands.add_parser(name, help=help_text)
        sub.add_argument("--moves", required=True, help="e.g. RI,wRII,sRIII")
        sub.add_argument("--cap", type=int, help="absolute crossing cap")
        sub.add_argument("--node-cap", type=int)
        sub.add_argument("--time-cap", type=float)
        if name == "equiv":
            sub.add_argument("-o", "--output", help="write the witness JSON here")
            sub.add_argument("first")
            sub.add_argument("second")
        else:
            sub.add_argument("file")
        sub.set_defaults(handler=handler)

    enumerate_parser = commands.add_parser("enumerate", help="all curves up to a crossing number")
    enumerate_parser.add_argument("--max-c", type=int, required=True)
    enumerate_parser.add_argument("--cross-check", action="store_true")
    enumerate_parser.add_argument("-o", "--output")
    enumerate_parser.set_defaults(handler=command_enumerate)

    audit = commands.add_parser("audit", help="re-derive the classification")
    audit.add_argument("--table", type=int, action="append", choices=[1, 2, 3, 4, 5])
    audit.add_argument("--matrix", action="store_true", help="build the distinctness matrix")
    audit.add_argument("--contracting", action="store_true", help="macro and contracting checks")
    audit.add_argument("--all", action="store_true", help="tables, matrix and contracting")
    audit.add_argument("--no-reverify", action="store_true")
    audit.add_argument("-o", "--output", help="certificate store JSON")
    audit.add_argument(
        "--report-dir",
        help="directory for CSV, Excel and Markdown reports (default: KP_OUTPUT_DIR)",
    )
    audit.set_defaults(handler=command_audit)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except (AuditFailure, UnseparatedPairError) as e:
        logger.error(f"audit failed: {e}")
        certificate = getattr(e, "certificate", None)
        if certificate is not None:
            _print(certificate.to_dict())
        return 2
    except (KnotWorkbenchError, FileNotFoundError, KeyError, ValueError) as e:
        logger.error(str(e))
        return 1


if __name__ == "__main__":
    sys.exit(main())
