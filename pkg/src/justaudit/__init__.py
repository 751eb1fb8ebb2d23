"""Audit utility distributions for distributive justice and structural injustice."""

from justaudit.audit import AuditReport, run_audit
from justaudit.core import (
    AuditConfig,
    Direction,
    Disparity,
    GroupedPopulation,
    JusticeMetric,
    Pattern,
    Population,
    PopulationRecord,
    Theory,
    TheorySpec,
    build_population,
    filter_deserving,
    group_view,
)
from justaudit.selection import Candidate, CandidateScore

__all__ = [
    "AuditConfig",
    "AuditReport",
    "Candidate",
    "CandidateScore",
    "Direction",
    "Disparity",
    "GroupedPopulation",
    "JusticeMetric",
    "Pattern",
    "Population",
    "PopulationRecord",
    "Theory",
    "TheorySpec",
    "build_population",
    "filter_deserving",
    "group_view",
    "run_audit",
]

__version__ = "0.1.0"
