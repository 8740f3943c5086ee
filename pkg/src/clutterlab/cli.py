"""Command-line front end.

Exit codes: 0 success, 1 invariant violation (counterexample in the report),
2 input error, 3 resource guard exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from .bounds import bounds_report
from .campaign import CampaignSummary, check_clutter, fuzz_clutters
from .clutter import Clutter, alexander_dual, strip_isolated
from .corpus import all_clutters
from .domination import epsilon, independent_domination
from .errors import ClutterError, InvariantViolation, ResourceGuard, TooLarge
from .families import FamilySpec, closed_forms, family_clutter, realizability_search
from .homology import FieldSpec
from .invariants import MAX_BETTI_VERTICES, betti_table, pd_quotient
from .io import SCHEMA_VERSION, clutter_json, graph_json, load_clutter, write_output

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT, EXIT_GUARD = 0, 1, 2, 3
MAX_SCAN_N = 5

ANALYZE_COLUMNS = (
    "n", "pd", "reg_of_ideal", "epsilon", "i_dom", "big_height", "alpha",
    "edgewise_bound", "faltings_bound", "alpha_reg_bound", "taylor_reg_bound",
    "comparison_predicate", "tight_edgewise", "tight_faltings", "field",
)
FAMILY_COLUMNS = (
    "kind", "n", "k", "i", "i_formula", "epsilon", "eps_formula", "pd", "pd_formula", "status",
)
SUMMARY_COLUMNS = (
    "command", "clutters", "violations", "field_disagreements",
    "tight_edgewise", "tight_faltings", "predicate_true",
)

TSV_HELP = f"""\
TSV output has a header row followed by data rows, tab separated:
  analyze      {' '.join(ANALYZE_COLUMNS)}
  family       {' '.join(FAMILY_COLUMNS)}
  scan, fuzz   {' '.join(SUMMARY_COLUMNS)}
  realizable   found vertices adjacency   (adjacency as u-v pairs, space separated)
  dual         edge                        (one row per edge, names space separated)
"""


class _Failure(Exception):
    def __init__(self, code: int, message: str, payload: dict | None = None) -> None:
        super().__init__(message)
        self.code = code
        self.payload = payload


def _tsv(columns: Sequence[str], rows: Sequence[dict]) -> str:
    def cell(v: object) -> str:
        if isinstance(v, bool):
            return "true" if v else "false"
        return str(v)

    lines = ["\t".join(columns)]
    lines.extend("\t".join(cell(row[c]) for c in columns) for row in rows)
    return "\n".join(lines) + "\n"


def _json(payload: dict) -> str:
    return json.dumps({"schema": SCHEMA_VERSION, **payload}, indent=2) + "\n"


def _max_n(args: argparse.Namespace) -> int:
    if args.max_n is not None:
        return args.max_n
    env = os.environ.get("CLUTTERLAB_MAX_N")
    if env:
        try:
            return int(env)
        except ValueError:
            raise ClutterError(f"CLUTTERLAB_MAX_N must be an integer, got {env!r}") from None
    return MAX_BETTI_VERTICES


def _report_payload(C: Clutter, args: argparse.Namespace) -> dict:
    report = bounds_report(C, args.field, _max_n(args))
    body = report.as_dict()
    body["witness_F"] = [list(C.names(e)) for e in report.witness_F]
    body["witness_I"] = list(C.names(report.witness_I))
    payload = {"command": "analyze", "field": args.field.name, "clutter": clutter_json(C), "report": body}
    if args.betti:
        bare, _ = strip_isolated(C)
        entries = []
        if bare.edges:
            table = betti_table(bare, args.field, _max_n(args))
            entries = [
                {"i": i, "support": list(bare.names(A)), "dim": b} for i, A, b in table.entries
            ]
        payload["betti"] = entries
    return payload


def cmd_analyze(args: argparse.Namespace) -> tuple[int, str]:
    C = load_clutter(args.input)
    try:
        payload = _report_payload(C, args)
    except InvariantViolation as exc:
        raise _Failure(EXIT_VIOLATION, str(exc), {"command": "analyze", "violation": exc.details})
    if args.format == "tsv":
        return EXIT_OK, _tsv(ANALYZE_COLUMNS, [payload["report"]])
    return EXIT_OK, _json(payload)


def cmd_family(args: argparse.Namespace) -> tuple[int, str]:
    spec = FamilySpec(args.kind, args.n, args.k)
    C = family_clutter(spec)
    forms = closed_forms(spec)
    row = {
        "kind": spec.kind,
        "n": spec.n,
        "k": spec.k,
        "i": independent_domination(C)[0],
        "i_formula": forms.i_formula,
        "epsilon": epsilon(C)[0],
        "eps_formula": forms.eps_formula,
        "pd": pd_quotient(C, args.field, _max_n(args)),
        "pd_formula": forms.pd_formula,
    }
    checks = {
        "i": row["i"] == row["i_formula"],
        "epsilon": row["epsilon"] == row["eps_formula"],
        "pd": row["pd"] == row["pd_formula"],
    }
    row["status"] = "match" if all(checks.values()) else "mismatch"
    code = EXIT_OK if all(checks.values()) else EXIT_VIOLATION
    if args.format == "tsv":
        return code, _tsv(FAMILY_COLUMNS, [row])
    columns = {name: ("match" if ok else "mismatch") for name, ok in checks.items()}
    return code, _json({"command": "family", "field": args.field.name, "row": row, "columns": columns})


def _campaign_output(summary: CampaignSummary, args: argparse.Namespace, extra: dict) -> tuple[int, str]:
    code = EXIT_VIOLATION if summary.violations else EXIT_OK
    if args.format == "tsv":
        text = _tsv(SUMMARY_COLUMNS, [summary.as_dict()])
        for dump in summary.counterexamples:
            text += "# counterexample " + json.dumps(dump) + "\n"
        return code, text
    return code, _json({**summary.as_dict(), **extra})


def _fields(args: argparse.Namespace) -> tuple[FieldSpec, ...]:
    return (args.field,) if args.single_field else (args.field, FieldSpec(0) if args.field.p else FieldSpec(2))


def cmd_scan(args: argparse.Namespace) -> tuple[int, str]:
    if args.n is None:
        raise ClutterError("scan needs --n")
    if not 0 <= args.n <= MAX_SCAN_N:
        raise TooLarge(f"exhaustive scan limited to n <= {MAX_SCAN_N}")
    summary = CampaignSummary("scan")
    for C in all_clutters(args.n):
        summary.add(check_clutter(C, _fields(args), _max_n(args)))
    return _campaign_output(summary, args, {"n": args.n, "fields": [f.name for f in _fields(args)]})


def cmd_fuzz(args: argparse.Namespace) -> tuple[int, str]:
    if args.n is None or args.n < 1:
        raise ClutterError("fuzz needs --n >= 1")
    if args.n > _max_n(args):
        raise TooLarge(f"n = {args.n} exceeds the guard of {_max_n(args)}")
    summary = CampaignSummary("fuzz")
    for C in fuzz_clutters(args.n, args.trials, args.seed):
        summary.add(check_clutter(C, _fields(args), _max_n(args)))
    extra = {"n": args.n, "trials": args.trials, "seed": args.seed, "fields": [f.name for f in _fields(args)]}
    return _campaign_output(summary, args, extra)


def cmd_realizable(args: argparse.Namespace) -> tuple[int, str]:
    C = load_clutter(args.input)
    if args.k is None:
        sizes = {e.bit_count() for e in C.edges}
        if len(sizes) != 1:
            raise ClutterError("pass --k, or give a nonempty uniform clutter")
        k = sizes.pop()
    else:
        k = args.k
    G = realizability_search(C, k)
    if args.format == "tsv":
        row = {
            "found": G is not None,
            "vertices": " ".join(C.ground),
            "adjacency": "" if G is None else " ".join(f"{a}-{b}" for a, b in graph_json(G)["adjacency"]),
        }
        return EXIT_OK, _tsv(("found", "vertices", "adjacency"), [row])
    return EXIT_OK, _json({"command": "realizable", "k": k, "found": G is not None, "graph": None if G is None else graph_json(G)})


def cmd_dual(args: argparse.Namespace) -> tuple[int, str]:
    C = load_clutter(args.input)
    D = alexander_dual(C)
    if args.format == "tsv":
        return EXIT_OK, _tsv(("edge",), [{"edge": " ".join(D.names(e))} for e in D.edges])
    return EXIT_OK, _json({"command": "dual", **clutter_json(D)})


COMMANDS = {
    "analyze": cmd_analyze,
    "family": cmd_family,
    "scan": cmd_scan,
    "fuzz": cmd_fuzz,
    "realizable": cmd_realizable,
    "dual": cmd_dual,
}


def _field_arg(text: str) -> FieldSpec:
    try:
        return FieldSpec.parse(text)
    except ClutterError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", type=_field_arg, default=FieldSpec(2), help="q, gf2 (default) or gf:<p>")
    common.add_argument("--format", choices=("json", "tsv"), default="json")
    common.add_argument("--seed", type=int, default=0, help="64-bit seed for randomized campaigns")
    common.add_argument("--trials", type=int, default=100)
    common.add_argument("--max-n", type=int, default=None, help="vertex guard for Betti computations (default 12, or $CLUTTERLAB_MAX_N)")
    common.add_argument("--betti", action="store_true", help="include the full multigraded Betti table")
    common.add_argument("--out", default=None, help="write here (atomically) instead of stdout")

    parser = argparse.ArgumentParser(
        prog="clutterlab",
        description="Exact invariants and bounds for clutters (squarefree monomial ideals).",
        epilog=TSV_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="bounds report for one clutter")
    p.add_argument("input", help='clutter file, or "-" for stdin')

    p = sub.add_parser("family", parents=[common], help="compare a path/cycle family with its closed forms")
    p.add_argument("--kind", choices=("path", "cycle"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)

    for name, text in (("scan", "check every clutter on n vertices"), ("fuzz", "check seeded random clutters")):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--single-field", action="store_true", help="skip the second field cross-check")

    p = sub.add_parser("realizable", parents=[common], help="search for G with C_k(G) equal to the input")
    p.add_argument("input")
    p.add_argument("--k", type=int, default=None)

    p = sub.add_parser("dual", parents=[common], help="Alexander dual of a clutter")
    p.add_argument("input")
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code, text = COMMANDS[args.command](args)
    except _Failure as exc:
        code, text = exc.code, _json(exc.payload or {"error": str(exc)})
    except ResourceGuard as exc:
        print(f"clutterlab: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except ClutterError as exc:
        print(f"clutterlab: {exc}", file=sys.stderr)
        return EXIT_INPUT
    write_output(text, args.out)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
