"""Choosing among candidate distributions by justice and fairness.

Fairness is always oriented as "lower disparity is better". Justice keeps
the direction of its metric (inequality is minimized, shares and tail means
are maximized).
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from justaudit import fairness
from justaudit.core import (
    AuditConfig,
    Direction,
    Pattern,
    Population,
    TheorySpec,
    filter_deserving,
    group_view,
)
from justaudit.errors import AuditError, CandidateError, NoFeasibleCandidateError
from justaudit.justice import justice_metric


@dataclass(frozen=True)
class Candidate:
    name: str
    population: Population


@dataclass(frozen=True)
class CandidateScore:
    name: str
    justice_value: float
    justice_direction: Direction
    fairness_disparity: float
    passes_fairness: bool
    passes_leveling_up: bool | None = None

    @property
    def oriented_justice(self) -> float:
        """Justice value flipped so that larger is always better."""
        if self.justice_direction is Direction.MINIMIZE:
            return -self.justice_value
        return self.justice_value


def _score_one(
    cand: Candidate, theory: TheorySpec, cfg: AuditConfig, constraint: float
) -> CandidateScore:
    pop = filter_deserving(cand.population)
    value, direction = justice_metric(pop, theory, cfg)
    primary = fairness.group_measures(group_view(pop), theory)[0]
    gap = fairness.disparity(primary, cfg.disparity)
    leveling = None
    if cfg.leveling_up_threshold is not None:
        leveling = all(fairness.leveling_up_check(primary, cfg.leveling_up_threshold).values())
    passes = leveling if cfg.pattern is Pattern.LEVELING_UP else gap <= constraint
    return CandidateScore(cand.name, value, direction, gap, bool(passes), leveling)


def score_candidates(
    cands: Sequence[Candidate],
    theory: TheorySpec,
    cfg: AuditConfig | None = None,
    fairness_constraint: float | None = None,
) -> list[CandidateScore]:
    """Score every candidate under one configuration.

    The fairness disparity is taken on the theory's primary group measure
    (group means, group shares above threshold, or group tail means). A
    candidate passes fairness when that disparity is at most
    ``fairness_constraint`` (default: the equality tolerance), or, under the
    leveling-up pattern, when every group clears the leveling-up floor.
    """
    cfg = cfg or AuditConfig()
    if not cands:
        raise AuditError("no candidates to score")
    names = [c.name for c in cands]
    if len(set(names)) != len(names):
        raise AuditError(f"candidate names must be unique: {names}")
    constraint = cfg.equality_tolerance if fairness_constraint is None else fairness_constraint
    scores = []
    for cand in cands:
        try:
            scores.append(_score_one(cand, theory, cfg, constraint))
        except AuditError as exc:
            raise CandidateError(cand.name, exc) from exc
    return scores


def lexical_select(scores: Sequence[CandidateScore]) -> str:
    """Fairness first as a hard constraint, then the best justice value; ties by name."""
    feasible = [s for s in scores if s.passes_fairness]
    if not feasible:
        raise NoFeasibleCandidateError("no candidate satisfies the fairness constraint")
    best = min(feasible, key=lambda s: (-s.oriented_justice, s.name))
    return best.name


def dominates(a: CandidateScore, b: CandidateScore) -> bool:
    at_least = a.oriented_justice >= b.oriented_justice and a.fairness_disparity <= b.fairness_disparity
    strictly = a.oriented_justice > b.oriented_justice or a.fairness_disparity < b.fairness_disparity
    return at_least and strictly


def pareto_front(scores: Sequence[CandidateScore]) -> list[str]:
    """Names of non-dominated candidates, in input order. O(k^2)."""
    return [
        s.name for s in scores if not any(dominates(o, s) for o in scores if o is not s)
    ]
