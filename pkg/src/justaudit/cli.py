"""Command-line entry point.

Exit codes: 0 when every configured criterion holds (or the command
succeeded), 1 when an audit completes but some criterion fails or no
candidate is feasible, 2 on usage or data errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from justaudit.audit import run_audit
from justaudit.core import AuditConfig, Disparity, JusticeMetric, Pattern, Theory, TheorySpec
from justaudit.errors import AuditError, NoFeasibleCandidateError
from justaudit.fixtures import write_fixtures
from justaudit.report import emit_pareto_points, emit_report, parse_population_csv
from justaudit.selection import Candidate, lexical_select, pareto_front, score_candidates

EXIT_OK, EXIT_FAIL, EXIT_ERROR = 0, 1, 2


def _add_theory_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--theory", required=True, choices=[t.value for t in Theory])
    p.add_argument("--threshold", type=float, help="sufficientarian threshold t")
    p.add_argument(
        "--quantile", type=float, default=0.05, help="worst-off fraction for maximin (default 0.05)"
    )
    p.add_argument("--pattern", choices=[x.value for x in Pattern], default=Pattern.EGALITARIAN.value)
    p.add_argument("--leveling-up-threshold", type=float, dest="leveling_up_threshold")
    p.add_argument("--tolerance", type=float, default=0.0, help="absolute tolerance for equality")
    p.add_argument(
        "--justice-metric",
        choices=[m.value for m in JusticeMetric],
        default=JusticeMetric.VARIANCE.value,
        help="inequality metric for egalitarian justice",
    )
    p.add_argument(
        "--justice-threshold",
        type=float,
        help="approximate justice criterion: metric must beat this value strictly",
    )
    p.add_argument("--disparity", choices=[d.value for d in Disparity], default=Disparity.MAX_GAP.value)
    p.add_argument("--min-group-size", type=int, default=1, help="warn about smaller groups")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="justaudit", description="Audit utility distributions for justice and group fairness."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    audit = sub.add_parser("audit", help="audit one population CSV")
    _add_theory_flags(audit)
    audit.add_argument("--format", choices=["json", "text"], default="json")
    audit.add_argument("--out", type=Path, help="write the report here instead of stdout")
    audit.add_argument(
        "--include-naive", action="store_true", help="add contrast baselines to the report"
    )
    audit.add_argument("input", type=Path)

    select = sub.add_parser("select", help="choose among candidate population CSVs")
    _add_theory_flags(select)
    select.add_argument("--mode", choices=["lexical", "pareto"], default="lexical")
    select.add_argument(
        "--fairness-constraint",
        type=float,
        dest="fairness_constraint",
        help="maximum admissible disparity (default: --tolerance)",
    )
    select.add_argument("--out", type=Path, help="write the Pareto CSV here instead of stdout")
    select.add_argument("inputs", type=Path, nargs="+", help="one CSV per candidate; name = file stem")

    fixtures = sub.add_parser("fixtures", help="write the canonical example populations")
    fixtures.add_argument("--out", type=Path, required=True)
    return parser


def _theory_and_config(
    parser: argparse.ArgumentParser, args: argparse.Namespace
) -> tuple[TheorySpec, AuditConfig]:
    kind = Theory(args.theory)
    if kind is Theory.SUFFICIENTARIAN and args.threshold is None:
        parser.error("--threshold is required for --theory sufficientarian")
    if not 0 < args.quantile <= 1:
        parser.error("--quantile must lie in (0, 1]")
    if args.tolerance < 0:
        parser.error("--tolerance must be >= 0")
    if Pattern(args.pattern) is Pattern.LEVELING_UP and args.leveling_up_threshold is None:
        parser.error("--leveling-up-threshold is required for --pattern leveling-up")
    theory = TheorySpec(kind, threshold=args.threshold, tail_fraction=args.quantile)
    cfg = AuditConfig(
        equality_tolerance=args.tolerance,
        justice_metric=JusticeMetric(args.justice_metric),
        disparity=Disparity(args.disparity),
        pattern=Pattern(args.pattern),
        leveling_up_threshold=args.leveling_up_threshold,
        approximate_justice_threshold=args.justice_threshold,
        min_group_size=args.min_group_size,
    )
    return theory, cfg


def _write(data: bytes, out: Path | None) -> None:
    if out is None:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    else:
        out.write_bytes(data)


def run_audit_cmd(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    theory, cfg = _theory_and_config(parser, args)
    report = run_audit(parse_population_csv(args.input), theory, cfg, include_naive=args.include_naive)
    _write(emit_report(report, args.format), args.out)
    return EXIT_OK if report.passed else EXIT_FAIL


def run_select_cmd(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    theory, cfg = _theory_and_config(parser, args)
    cands = [Candidate(path.stem, parse_population_csv(path)) for path in args.inputs]
    scores = score_candidates(cands, theory, cfg, args.fairness_constraint)
    if args.mode == "pareto":
        _write(emit_pareto_points(scores, pareto_front(scores)), args.out)
        return EXIT_OK
    try:
        winner = lexical_select(scores)
    except NoFeasibleCandidateError as exc:
        print(f"justaudit: {exc}", file=sys.stderr)
        return EXIT_FAIL
    print(winner)
    return EXIT_OK


def run_fixtures_cmd(args: argparse.Namespace) -> int:
    for path in write_fixtures(args.out):
        print(path)
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "audit":
            return run_audit_cmd(parser, args)
        if args.command == "select":
            return run_select_cmd(parser, args)
        return run_fixtures_cmd(args)
    except (AuditError, OSError) as exc:
        print(f"justaudit: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
