"""Population data model, grouping and audit configuration."""

from __future__ import annotations

import enum
import math
from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from typing import Any

from justaudit.errors import (
    AuditError,
    DuplicateIdError,
    EmptyAfterFilterError,
    EmptyInputError,
    NonFiniteUtilityError,
)


class Theory(str, enum.Enum):
    EGALITARIAN = "egalitarian"
    SUFFICIENTARIAN = "sufficientarian"
    MAXIMIN = "maximin"

    @property
    def criterion_type(self) -> bool:
        """True when fulfillment is checkable from the actual distribution alone."""
        return self is not Theory.MAXIMIN


class JusticeMetric(str, enum.Enum):
    GINI = "gini"
    VARIANCE = "variance"
    RANGE_DIFFERENCE = "range-diff"
    RANGE_RATIO = "range-ratio"


class Disparity(str, enum.Enum):
    MAX_GAP = "max-gap"
    MAX_RATIO = "max-ratio"
    VARIANCE = "variance"


class Pattern(str, enum.Enum):
    """Distributive pattern applied across groups when judging structural injustice."""

    EGALITARIAN = "egalitarian"
    LEVELING_UP = "leveling-up"


class Direction(str, enum.Enum):
    MINIMIZE = "minimize"
    MAXIMIZE = "maximize"


@dataclass(frozen=True)
class PopulationRecord:
    id: str
    group: str
    utility: float
    deserving: bool = True

    def __post_init__(self) -> None:
        if not isinstance(self.utility, (int, float)) or isinstance(self.utility, bool):
            raise NonFiniteUtilityError(f"utility of {self.id!r} is not a real number")
        if not math.isfinite(self.utility):
            raise NonFiniteUtilityError(f"utility of {self.id!r} is not finite: {self.utility!r}")
        object.__setattr__(self, "utility", float(self.utility))


@dataclass(frozen=True)
class Population:
    """Ordered, immutable collection of records with unique ids."""

    records: tuple[PopulationRecord, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "records", tuple(self.records))
        seen: set[str] = set()
        for rec in self.records:
            if rec.id in seen:
                raise DuplicateIdError(f"duplicate id {rec.id!r}")
            seen.add(rec.id)

    def __len__(self) -> int:
        return len(self.records)

    def __iter__(self):
        return iter(self.records)

    @property
    def utilities(self) -> tuple[float, ...]:
        return tuple(r.utility for r in self.records)

    @property
    def labels(self) -> list[str]:
        return sorted({r.group for r in self.records})


@dataclass(frozen=True)
class GroupedPopulation:
    """Population partitioned by group label.

    Labels are kept in sorted order; members of each group keep record order.
    """

    members: Mapping[str, tuple[PopulationRecord, ...]]
    total_size: int

    @property
    def groups(self) -> dict[str, tuple[float, ...]]:
        return {label: tuple(r.utility for r in recs) for label, recs in self.members.items()}

    @property
    def sizes(self) -> dict[str, int]:
        return {label: len(recs) for label, recs in self.members.items()}

    @property
    def records(self) -> list[PopulationRecord]:
        return [r for recs in self.members.values() for r in recs]


@dataclass(frozen=True)
class TheorySpec:
    kind: Theory
    threshold: float | None = None
    tail_fraction: float = 0.05

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", Theory(self.kind))
        if self.kind is Theory.SUFFICIENTARIAN:
            if self.threshold is None or not math.isfinite(self.threshold):
                raise AuditError("sufficientarian theory needs a finite threshold")
        if self.kind is Theory.MAXIMIN and not 0 < self.tail_fraction <= 1:
            raise AuditError(f"tail fraction must lie in (0, 1], got {self.tail_fraction}")

    def to_dict(self) -> dict[str, Any]:
        return {
            "kind": self.kind.value,
            "threshold": self.threshold,
            "tail_fraction": self.tail_fraction,
        }


@dataclass(frozen=True)
class AuditConfig:
    equality_tolerance: float = 0.0
    justice_metric: JusticeMetric = JusticeMetric.VARIANCE
    disparity: Disparity = Disparity.MAX_GAP
    pattern: Pattern = Pattern.EGALITARIAN
    leveling_up_threshold: float | None = None
    approximate_justice_threshold: float | None = None
    min_group_size: int = 1

    def __post_init__(self) -> None:
        for name, enum_type in (
            ("justice_metric", JusticeMetric),
            ("disparity", Disparity),
            ("pattern", Pattern),
        ):
            object.__setattr__(self, name, enum_type(getattr(self, name)))
        if not self.equality_tolerance >= 0:
            raise AuditError(f"equality tolerance must be >= 0, got {self.equality_tolerance}")
        if self.pattern is Pattern.LEVELING_UP and self.leveling_up_threshold is None:
            raise AuditError("leveling-up pattern needs a leveling-up threshold")

    def to_dict(self) -> dict[str, Any]:
        return {
            "equality_tolerance": self.equality_tolerance,
            "justice_metric": self.justice_metric.value,
            "disparity": self.disparity.value,
            "pattern": self.pattern.value,
            "leveling_up_threshold": self.leveling_up_threshold,
            "approximate_justice_threshold": self.approximate_justice_threshold,
            "min_group_size": self.min_group_size,
        }


def build_population(records: Iterable[tuple | PopulationRecord]) -> Population:
    """Validate raw ``(id, group, utility[, deserving])`` tuples into a Population."""
    built = []
    for raw in records:
        if isinstance(raw, PopulationRecord):
            built.append(raw)
            continue
        ident, group, utility, *rest = raw
        try:
            value = float(utility)
        except (TypeError, ValueError):
            raise NonFiniteUtilityError(f"utility of {ident!r} is not a real number: {utility!r}")
        deserving = bool(rest[0]) if rest else True
        built.append(PopulationRecord(str(ident), str(group), value, deserving))
    if not built:
        raise EmptyInputError("no records")
    return Population(tuple(built))


def filter_deserving(p: Population) -> Population:
    kept = tuple(r for r in p.records if r.deserving)
    if not kept:
        raise EmptyAfterFilterError("no deserving records remain")
    if len(kept) == len(p.records):
        return p
    return Population(kept)


def group_view(p: Population) -> GroupedPopulation:
    if not p.records:
        raise EmptyInputError("cannot group an empty population")
    members: dict[str, list[PopulationRecord]] = {}
    for rec in p.records:
        members.setdefault(rec.group, []).append(rec)
    ordered = {label: tuple(members[label]) for label in sorted(members)}
    return GroupedPopulation(members=ordered, total_size=len(p.records))


def worst_off_order(records: Iterable[PopulationRecord]) -> list[PopulationRecord]:
    """Records sorted ascending by ``(utility, id)``, the global tie-break order."""
    return sorted(records, key=lambda r: (r.utility, r.id))
