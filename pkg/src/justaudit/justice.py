"""Individual-level evaluation of a theory of distributive justice.

Nothing here looks at group labels: justice is judged over individuals.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from justaudit import metrics
from justaudit.core import (
    AuditConfig,
    Direction,
    JusticeMetric,
    Population,
    Theory,
    TheorySpec,
)
from justaudit.errors import OptimizationTypeTheoryError

_INEQUALITY = {
    JusticeMetric.GINI: metrics.gini,
    JusticeMetric.VARIANCE: metrics.variance,
    JusticeMetric.RANGE_DIFFERENCE: metrics.range_difference,
    JusticeMetric.RANGE_RATIO: metrics.range_ratio,
}


@dataclass(frozen=True)
class JusticeVerdict:
    theory: TheorySpec
    criterion_holds: bool | None
    metric_name: str
    metric_value: float
    direction: Direction
    approximate_holds: bool | None = None

    @property
    def passed(self) -> bool:
        """Gating verdict: the approximate criterion when configured, else the exact one.

        Optimization-type theories with no approximate threshold never fail here.
        """
        if self.approximate_holds is not None:
            return self.approximate_holds
        return self.criterion_holds is not False

    def to_dict(self) -> dict[str, Any]:
        return {
            "theory": self.theory.kind.value,
            "criterion_holds": self.criterion_holds,
            "metric_name": self.metric_name,
            "metric_value": self.metric_value,
            "direction": self.direction.value,
            "approximate_holds": self.approximate_holds,
        }


def check_justice_criterion(p: Population, theory: TheorySpec, tol: float = 0.0) -> bool:
    """Exact criterion check for criterion-type theories.

    Egalitarian holds when the utility range is within ``tol``; sufficientarian
    holds when every utility is strictly above the threshold. Maximin has no
    criterion that can be checked without counterfactual distributions.
    """
    utilities = p.utilities
    if theory.kind is Theory.EGALITARIAN:
        return metrics.range_difference(utilities) <= tol
    if theory.kind is Theory.SUFFICIENTARIAN:
        return all(u > theory.threshold for u in utilities)
    raise OptimizationTypeTheoryError(
        f"{theory.kind.value} is optimization-type and has no standalone criterion"
    )


def justice_metric_name(theory: TheorySpec, cfg: AuditConfig) -> str:
    if theory.kind is Theory.EGALITARIAN:
        return cfg.justice_metric.value
    if theory.kind is Theory.SUFFICIENTARIAN:
        return "share-above-threshold"
    return "tail-mean"


def justice_metric(
    p: Population, theory: TheorySpec, cfg: AuditConfig | None = None
) -> tuple[float, Direction]:
    cfg = cfg or AuditConfig()
    utilities = p.utilities
    if theory.kind is Theory.EGALITARIAN:
        return _INEQUALITY[cfg.justice_metric](utilities), Direction.MINIMIZE
    if theory.kind is Theory.SUFFICIENTARIAN:
        return metrics.share_above(utilities, theory.threshold), Direction.MAXIMIZE
    return metrics.tail_mean(utilities, theory.tail_fraction), Direction.MAXIMIZE


def approximate_criterion(metric_value: float, direction: Direction, threshold: float) -> bool:
    """Strict comparison of a metric against its acceptance threshold."""
    if Direction(direction) is Direction.MINIMIZE:
        return metric_value < threshold
    return metric_value > threshold


def evaluate_justice(p: Population, theory: TheorySpec, cfg: AuditConfig) -> JusticeVerdict:
    """Run the criterion (if any), the metric and the approximate criterion (if configured)."""
    holds = (
        check_justice_criterion(p, theory, cfg.equality_tolerance)
        if theory.kind.criterion_type
        else None
    )
    value, direction = justice_metric(p, theory, cfg)
    approx = None
    if cfg.approximate_justice_threshold is not None:
        approx = approximate_criterion(value, direction, cfg.approximate_justice_threshold)
    return JusticeVerdict(
        theory=theory,
        criterion_holds=holds,
        metric_name=justice_metric_name(theory, cfg),
        metric_value=value,
        direction=direction,
        approximate_holds=approx,
    )
