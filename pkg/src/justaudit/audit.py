"""Two-track audit of one population: individual justice, then group fairness."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from justaudit import fairness
from justaudit.core import (
    AuditConfig,
    Disparity,
    Pattern,
    Population,
    Theory,
    TheorySpec,
    filter_deserving,
    group_view,
)
from justaudit.errors import NonPositiveValuesError
from justaudit.fairness import FairnessVerdict, GroupMeasureTable
from justaudit.justice import JusticeVerdict, evaluate_justice


@dataclass(frozen=True)
class AuditReport:
    theory: TheorySpec
    config: AuditConfig
    justice: JusticeVerdict
    tables: tuple[GroupMeasureTable, ...]
    verdicts: dict[str, FairnessVerdict]
    # configured disparity per measure; None where undefined for the data
    disparities: dict[str, float | None]
    group_sizes: dict[str, int]
    n_records: int
    n_excluded: int
    warnings: tuple[str, ...] = ()
    naive: dict[str, Any] | None = None

    def gated_measures(self) -> list[str]:
        """Measures whose verdicts decide the fairness outcome under the configured pattern."""
        if self.config.pattern is Pattern.EGALITARIAN:
            return [t.measure_name for t in self.tables]
        return [t.measure_name for t in self.tables if t.higher_is_better]

    @property
    def fairness_passed(self) -> bool:
        if self.config.pattern is Pattern.EGALITARIAN:
            return all(self.verdicts[m].criterion_holds for m in self.gated_measures())
        return all(self.verdicts[m].leveling_up_holds for m in self.gated_measures())

    @property
    def passed(self) -> bool:
        return self.justice.passed and self.fairness_passed

    def to_dict(self) -> dict[str, Any]:
        verdicts = {}
        for name, verdict in self.verdicts.items():
            entry = verdict.to_dict()
            entry["disparity"] = {
                "kind": self.config.disparity.value,
                "value": self.disparities[name],
            }
            entry["gating"] = name in self.gated_measures()
            verdicts[name] = entry
        fairness_section: dict[str, Any] = {
            "pattern": self.config.pattern.value,
            "passed": self.fairness_passed,
            "verdicts": verdicts,
        }
        if self.naive is not None:
            fairness_section["naive_baselines"] = {"contrast_only": True, **self.naive}
        justice_section = self.justice.to_dict()
        justice_section["passed"] = self.justice.passed
        return {
            "config": {
                "theory": self.theory.to_dict(),
                "audit": self.config.to_dict(),
                "include_naive": self.naive is not None,
            },
            "justice": justice_section,
            "fairness": fairness_section,
            "groups": {
                "sizes": dict(self.group_sizes),
                "records": self.n_records,
                "excluded_not_deserving": self.n_excluded,
                "measures": {t.measure_name: dict(t.per_group) for t in self.tables},
            },
            "warnings": list(self.warnings),
        }


def _naive_baselines(grouped, theory: TheorySpec) -> dict[str, Any]:
    if theory.kind is Theory.SUFFICIENTARIAN:
        return {
            "naive_sufficientarian_group_check": fairness.naive_sufficientarian_group_check(
                grouped, theory.threshold
            )
        }
    if theory.kind is Theory.MAXIMIN:
        label, value = fairness.naive_maximin_objective(grouped)
        return {"naive_maximin_objective": {"worst_group": label, "value": value}}
    return {}


def run_audit(
    population: Population,
    theory: TheorySpec,
    cfg: AuditConfig | None = None,
    *,
    include_naive: bool = False,
) -> AuditReport:
    """Audit ``population`` against ``theory``.

    Only deserving records are evaluated. Justice is judged over
    individuals; fairness over the group tables the theory induces.
    """
    cfg = cfg or AuditConfig()
    warnings: list[str] = []
    deserving = filter_deserving(population)
    excluded = len(population) - len(deserving)
    if excluded:
        warnings.append(f"{excluded} record(s) excluded as not deserving")

    justice = evaluate_justice(deserving, theory, cfg)

    grouped = group_view(deserving)
    for label, size in grouped.sizes.items():
        if size < cfg.min_group_size:
            warnings.append(
                f"group {label!r} has {size} member(s), below minimum size {cfg.min_group_size}"
            )

    tables = fairness.group_measures(grouped, theory)
    verdicts: dict[str, FairnessVerdict] = {}
    disparities: dict[str, float | None] = {}
    for tbl in tables:
        t_lu = cfg.leveling_up_threshold if tbl.higher_is_better else None
        verdicts[tbl.measure_name] = fairness.fairness_criterion(
            tbl, cfg.equality_tolerance, t_lu
        )
        try:
            disparities[tbl.measure_name] = fairness.disparity(tbl, cfg.disparity)
        except NonPositiveValuesError as exc:
            disparities[tbl.measure_name] = None
            warnings.append(f"{Disparity(cfg.disparity).value} not reported: {exc}")

    return AuditReport(
        theory=theory,
        config=cfg,
        justice=justice,
        tables=tuple(tables),
        verdicts=verdicts,
        disparities=disparities,
        group_sizes=grouped.sizes,
        n_records=len(population),
        n_excluded=excluded,
        warnings=tuple(warnings),
        naive=_naive_baselines(grouped, theory) if include_naive else None,
    )
