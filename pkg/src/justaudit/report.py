"""Reading populations from CSV and writing reports.

Population CSV: header ``id,group,utility[,deserving]``, UTF-8, comma
separated, LF or CRLF line endings. Row numbers in errors are 1-based and
count the header as row 1.
"""

from __future__ import annotations

import csv
import io
import json
import math
from collections.abc import Sequence
from pathlib import Path
from typing import IO

from justaudit.audit import AuditReport
from justaudit.core import Disparity, Population, PopulationRecord, Theory
from justaudit.errors import (
    BadRowError,
    DuplicateIdError,
    EmptyInputError,
    MissingHeaderError,
    NonFiniteUtilityError,
)
from justaudit.selection import CandidateScore

BASE_HEADER = ("id", "group", "utility")
FULL_HEADER = BASE_HEADER + ("deserving",)
PARETO_HEADER = ("name", "justice_value", "fairness_disparity", "on_front")

_BOOLS = {"true": True, "1": True, "false": False, "0": False}


def _read_bytes(source: bytes | str | Path | IO[bytes]) -> bytes:
    if isinstance(source, bytes):
        return source
    if isinstance(source, (str, Path)):
        return Path(source).read_bytes()
    return source.read()


def parse_population_csv(source: bytes | str | Path | IO[bytes]) -> Population:
    """Parse a population CSV from bytes, a path, or a binary stream."""
    try:
        text = _read_bytes(source).decode("utf-8-sig")
    except UnicodeDecodeError as exc:
        raise BadRowError(1, f"not valid UTF-8: {exc}") from exc
    rows = list(csv.reader(io.StringIO(text, newline="")))
    if not rows or not any(field.strip() for field in rows[0]):
        raise MissingHeaderError("missing header row")
    header = tuple(field.strip() for field in rows[0])
    if header not in (BASE_HEADER, FULL_HEADER):
        raise MissingHeaderError(
            f"header must be id,group,utility[,deserving], got {','.join(header)}"
        )

    records: list[PopulationRecord] = []
    seen: set[str] = set()
    for rownum, row in enumerate(rows[1:], start=2):
        if len(row) != len(header):
            raise BadRowError(rownum, f"expected {len(header)} fields, got {len(row)}")
        ident, group, raw_utility = (field.strip() for field in row[:3])
        if not ident:
            raise BadRowError(rownum, "empty id")
        if not group:
            raise BadRowError(rownum, "empty group")
        try:
            utility = float(raw_utility)
        except ValueError:
            raise BadRowError(rownum, f"utility {raw_utility!r} is not a number") from None
        if not math.isfinite(utility):
            raise NonFiniteUtilityError(f"row {rownum}: utility {raw_utility!r} is not finite")
        deserving = True
        if len(header) == 4:
            flag = row[3].strip().lower()
            if flag not in _BOOLS:
                raise BadRowError(rownum, f"deserving flag {row[3]!r} not in true/false/1/0")
            deserving = _BOOLS[flag]
        if ident in seen:
            raise DuplicateIdError(f"row {rownum}: duplicate id {ident!r}")
        seen.add(ident)
        records.append(PopulationRecord(ident, group, utility, deserving))

    if not records:
        raise EmptyInputError("no data rows after header")
    return Population(tuple(records))


def format_number(x: float) -> str:
    """Integral values without a trailing ``.0``; everything else as the shortest round-trip repr."""
    if float(x).is_integer() and abs(x) < 2**53:
        return str(int(x))
    return repr(float(x))


def format_population_csv(p: Population) -> bytes:
    """Serialize a population; the deserving column appears only if some record is not deserving."""
    with_flag = any(not r.deserving for r in p.records)
    lines = [",".join(FULL_HEADER if with_flag else BASE_HEADER)]
    for r in p.records:
        fields = [r.id, r.group, format_number(r.utility)]
        if with_flag:
            fields.append("true" if r.deserving else "false")
        lines.append(",".join(fields))
    return ("\n".join(lines) + "\n").encode("utf-8")


def emit_report(report: AuditReport, fmt: str = "json") -> bytes:
    if fmt == "json":
        return (json.dumps(report.to_dict(), indent=2, sort_keys=True) + "\n").encode("utf-8")
    if fmt == "text":
        return render_text(report).encode("utf-8")
    raise ValueError(f"unknown report format {fmt!r}")


def _r4(x: float | None) -> str:
    return "n/a" if x is None else f"{x:.4f}"


def _yes_no(flag: bool | None) -> str:
    return "n/a" if flag is None else ("PASS" if flag else "FAIL")


def render_text(report: AuditReport) -> str:
    j = report.justice
    theory = report.theory
    desc = theory.kind.value
    if theory.kind is Theory.SUFFICIENTARIAN:
        desc += f", threshold {theory.threshold}"
    elif theory.kind is Theory.MAXIMIN:
        desc += f", tail fraction {theory.tail_fraction}"
    out = [
        f"theory: {desc}",
        f"records: {report.n_records} ({report.n_excluded} excluded as not deserving)",
        "",
        "justice",
        f"  criterion            {_yes_no(j.criterion_holds)}",
        f"  {j.metric_name:<20} {_r4(j.metric_value)} ({j.direction.value})",
        f"  approximate          {_yes_no(j.approximate_holds)}",
        "",
        f"fairness (pattern {report.config.pattern.value})",
    ]

    names = [t.measure_name for t in report.tables]
    labels = list(report.group_sizes)
    width = max([len("group")] + [len(lb) for lb in labels])
    colw = max(len(n) for n in names + ["size"]) + 2
    out.append("  " + "group".ljust(width) + "size".rjust(8) + "".join(n.rjust(colw) for n in names))
    for label in labels:
        cells = "".join(_r4(t.per_group[label]).rjust(colw) for t in report.tables)
        out.append("  " + label.ljust(width) + str(report.group_sizes[label]).rjust(8) + cells)
    out.append("")
    for name in names:
        v = report.verdicts[name]
        line = f"  {name}: equality {_yes_no(v.criterion_holds)}  max-gap {_r4(v.disparity_value)}"
        if report.config.disparity is not Disparity.MAX_GAP:
            line += f"  {report.config.disparity.value} {_r4(report.disparities[name])}"
        if v.leveling_up is not None:
            line += f"  leveling-up {_yes_no(v.leveling_up_holds)}"
        out.append(line)
    if report.naive:
        out.append("")
        out.append("naive baselines (contrast only)")
        for key, value in report.naive.items():
            out.append(f"  {key}: {value}")
    if report.warnings:
        out.append("")
        out.append("warnings")
        out.extend(f"  - {w}" for w in report.warnings)
    out.append("")
    out.append(f"overall: {_yes_no(report.passed)}")
    return "\n".join(out) + "\n"


def emit_pareto_points(scores: Sequence[CandidateScore], front: Sequence[str]) -> bytes:
    on_front = set(front)
    lines = [",".join(PARETO_HEADER)]
    for s in sorted(scores, key=lambda s: s.name):
        lines.append(
            ",".join(
                [
                    s.name,
                    repr(float(s.justice_value)),
                    repr(float(s.fairness_disparity)),
                    "true" if s.name in on_front else "false",
                ]
            )
        )
    return ("\n".join(lines) + "\n").encode("utf-8")
