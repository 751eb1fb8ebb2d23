"""Group-level evaluation of structural injustice.

Each theory of justice induces one or more per-group measures (what the
deviations from its ideal look like at group level). Those tables are then
judged under an equality pattern (all groups equal within a tolerance) or a
leveling-up pattern (every group strictly above a floor).

The ``naive_*`` functions are contrast baselines only: they transfer the
individual-level rule to group averages and can rank groups the wrong way.
Their output must never feed model selection.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any

from justaudit import metrics
from justaudit.core import (
    Disparity,
    GroupedPopulation,
    Theory,
    TheorySpec,
    worst_off_order,
)
from justaudit.errors import EmptyGroupError, NonPositiveValuesError

GROUP_MEAN = "group-mean"
SHARE_ABOVE = "share-above-threshold"
MEMBERSHIP_RATE = "worst-off-membership-rate"
GROUP_TAIL_MEAN = "group-tail-mean"


@dataclass(frozen=True)
class GroupMeasureTable:
    measure_name: str
    per_group: Mapping[str, float]
    basis_theory: TheorySpec
    # False for measures where a larger value means a worse-off group.
    higher_is_better: bool = True

    def to_dict(self) -> dict[str, Any]:
        return {
            "measure": self.measure_name,
            "per_group": dict(self.per_group),
            "higher_is_better": self.higher_is_better,
        }


@dataclass(frozen=True)
class FairnessVerdict:
    criterion_holds: bool
    disparity_name: str
    disparity_value: float
    pairwise_gaps: Mapping[tuple[str, str], float] = field(default_factory=dict)
    leveling_up: Mapping[str, bool] | None = None

    @property
    def leveling_up_holds(self) -> bool | None:
        if self.leveling_up is None:
            return None
        return all(self.leveling_up.values())

    def to_dict(self) -> dict[str, Any]:
        return {
            "criterion_holds": self.criterion_holds,
            "disparity_name": self.disparity_name,
            "disparity_value": self.disparity_value,
            "pairwise_gaps": {f"{a}|{b}": gap for (a, b), gap in self.pairwise_gaps.items()},
            "leveling_up": None if self.leveling_up is None else dict(self.leveling_up),
            "leveling_up_holds": self.leveling_up_holds,
        }


def _check_groups(g: GroupedPopulation) -> None:
    if not g.members:
        raise EmptyGroupError("no groups")
    for label, recs in g.members.items():
        if not recs:
            raise EmptyGroupError(f"group {label!r} is empty")


def egalitarian_group_measures(
    g: GroupedPopulation, theory: TheorySpec | None = None
) -> GroupMeasureTable:
    """Per-group expected utility."""
    _check_groups(g)
    return GroupMeasureTable(
        GROUP_MEAN,
        {label: metrics.mean(u) for label, u in g.groups.items()},
        theory or TheorySpec(Theory.EGALITARIAN),
    )


def sufficientarian_group_measures(g: GroupedPopulation, t: float) -> GroupMeasureTable:
    """Per-group share strictly above ``t``, i.e. the group mean of ``I(u > t)``."""
    _check_groups(g)
    return GroupMeasureTable(
        SHARE_ABOVE,
        {label: metrics.share_above(u, t) for label, u in g.groups.items()},
        TheorySpec(Theory.SUFFICIENTARIAN, threshold=t),
    )


def maximin_membership_rates(g: GroupedPopulation, q: float) -> GroupMeasureTable:
    """Fraction of each group that falls in the global worst-off set.

    The worst-off set holds the ``ceil(q * n)`` lowest records of the whole
    population, ordered by ``(utility, id)``.
    """
    _check_groups(g)
    k = metrics.tail_size(g.total_size, q)
    worst = worst_off_order(g.records)[:k]
    counts = dict.fromkeys(g.members, 0)
    for rec in worst:
        counts[rec.group] += 1
    return GroupMeasureTable(
        MEMBERSHIP_RATE,
        {label: counts[label] / len(recs) for label, recs in g.members.items()},
        TheorySpec(Theory.MAXIMIN, tail_fraction=q),
        higher_is_better=False,
    )


def maximin_group_tail_means(g: GroupedPopulation, q: float) -> GroupMeasureTable:
    """Mean utility of each group's own worst-off ``ceil(q * n_group)`` members."""
    _check_groups(g)
    metrics.tail_size(1, q)
    return GroupMeasureTable(
        GROUP_TAIL_MEAN,
        {label: metrics.tail_mean(u, q) for label, u in g.groups.items()},
        TheorySpec(Theory.MAXIMIN, tail_fraction=q),
    )


def group_measures(g: GroupedPopulation, theory: TheorySpec) -> list[GroupMeasureTable]:
    """All group measures a theory induces. The first one is the primary measure."""
    if theory.kind is Theory.EGALITARIAN:
        return [egalitarian_group_measures(g, theory)]
    if theory.kind is Theory.SUFFICIENTARIAN:
        return [sufficientarian_group_measures(g, theory.threshold)]
    return [
        maximin_group_tail_means(g, theory.tail_fraction),
        maximin_membership_rates(g, theory.tail_fraction),
    ]


def disparity(tbl: GroupMeasureTable, kind: Disparity = Disparity.MAX_GAP) -> float:
    values = list(tbl.per_group.values())
    if not values:
        raise EmptyGroupError("disparity of an empty table")
    kind = Disparity(kind)
    if kind is Disparity.MAX_GAP:
        return max(values) - min(values)
    if kind is Disparity.VARIANCE:
        return metrics.variance(values)
    lo = min(values)
    if lo <= 0:
        raise NonPositiveValuesError(
            f"max/min ratio undefined: {tbl.measure_name} has non-positive value {lo!r}"
        )
    return max(values) / lo


def pairwise_gaps(tbl: GroupMeasureTable) -> dict[tuple[str, str], float]:
    labels = sorted(tbl.per_group)
    return {
        (a, b): abs(tbl.per_group[a] - tbl.per_group[b]) for a, b in combinations(labels, 2)
    }


def leveling_up_check(tbl: GroupMeasureTable, t_lu: float) -> dict[str, bool]:
    """Per group, whether the measure strictly exceeds the floor ``t_lu``."""
    return {label: value > t_lu for label, value in tbl.per_group.items()}


def fairness_criterion(
    tbl: GroupMeasureTable, tol: float = 0.0, t_lu: float | None = None
) -> FairnessVerdict:
    """Equality verdict on a group table, judged on the max-min gap.

    A single group holds vacuously. When ``t_lu`` is given the per-group
    leveling-up checks are attached as well.
    """
    gap = disparity(tbl, Disparity.MAX_GAP)
    return FairnessVerdict(
        criterion_holds=gap <= tol,
        disparity_name=Disparity.MAX_GAP.value,
        disparity_value=gap,
        pairwise_gaps=pairwise_gaps(tbl),
        leveling_up=None if t_lu is None else leveling_up_check(tbl, t_lu),
    )


def naive_sufficientarian_group_check(g: GroupedPopulation, t: float) -> dict[str, bool]:
    """Contrast only: whether each group's mean utility exceeds ``t``."""
    _check_groups(g)
    return {label: metrics.mean(u) > t for label, u in g.groups.items()}


def naive_maximin_objective(g: GroupedPopulation) -> tuple[str, float]:
    """Contrast only: the group with the lowest mean utility, ties to the first label."""
    _check_groups(g)
    means = {label: metrics.mean(u) for label, u in g.groups.items()}
    worst = min(sorted(means), key=lambda label: means[label])
    return worst, means[worst]
