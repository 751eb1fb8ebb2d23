"""Canonical populations for the worked examples the audit is checked against.

=========================== ================================================
file                        contents
=========================== ================================================
wages_dist1.csv             six wages, A=[10,30,50], B=[20,40,60]
wages_dist2.csv             same wages reassigned, A=[40,50,60], B=[10,20,30]
sufficientarian_divergence  g1: 95 x 10.1 and 5 x -100; g2: 95 x 9.9 and
                            5 x 200 (threshold 10)
maximin_divergence          g1=[1,1,100,100], g2=[20,20,30,30]
exam_grading                18 deserving group-1 students graded B (3),
                            2 deserving group-2 students graded C (2), plus
                            5 non-deserving students with other grades
coin_loans                  1000 applicants per group, approval (1) or
                            refusal (0) by a seeded fair coin
=========================== ================================================
"""

from __future__ import annotations

import random
from collections.abc import Callable
from pathlib import Path

from justaudit.core import Population, build_population
from justaudit.report import format_population_csv

COIN_SEED = 20240521
COIN_GROUP_SIZE = 1000


def _wages(order: list[tuple[str, float]]) -> Population:
    # group label is the initial of the name
    return build_population((name, name[0], wage) for name, wage in order)


def wages_dist1() -> Population:
    return _wages(
        [("Anna", 10), ("Berta", 20), ("Anton", 30), ("Basti", 40), ("Adriana", 50), ("Barbara", 60)]
    )


def wages_dist2() -> Population:
    return _wages(
        [("Berta", 10), ("Basti", 20), ("Barbara", 30), ("Anna", 40), ("Anton", 50), ("Adriana", 60)]
    )


def sufficientarian_divergence() -> Population:
    rows = []
    for i in range(95):
        rows.append((f"g1-{i:03d}", "g1", 10.1))
    for i in range(95, 100):
        rows.append((f"g1-{i:03d}", "g1", -100))
    for i in range(95):
        rows.append((f"g2-{i:03d}", "g2", 9.9))
    for i in range(95, 100):
        rows.append((f"g2-{i:03d}", "g2", 200))
    return build_population(rows)


def maximin_divergence() -> Population:
    rows = [(f"g1-{i}", "g1", u) for i, u in enumerate([1, 1, 100, 100])]
    rows += [(f"g2-{i}", "g2", u) for i, u in enumerate([20, 20, 30, 30])]
    return build_population(rows)


def exam_grading() -> Population:
    rows = [(f"s1-{i:02d}", "group1", 3, True) for i in range(18)]
    rows += [(f"s2-{i:02d}", "group2", 2, True) for i in range(2)]
    rows += [
        ("s1-90", "group1", 4, False),
        ("s1-91", "group1", 1, False),
        ("s2-90", "group2", 4, False),
        ("s2-91", "group2", 2, False),
        ("s2-92", "group2", 1, False),
    ]
    return build_population(rows)


def coin_loans(seed: int = COIN_SEED, group_size: int = COIN_GROUP_SIZE) -> Population:
    rng = random.Random(seed)
    rows = []
    for group in ("group1", "group2"):
        for i in range(group_size):
            rows.append((f"{group}-{i:04d}", group, 1 if rng.random() < 0.5 else 0))
    return build_population(rows)


FIXTURES: dict[str, Callable[[], Population]] = {
    "wages_dist1": wages_dist1,
    "wages_dist2": wages_dist2,
    "sufficientarian_divergence": sufficientarian_divergence,
    "maximin_divergence": maximin_divergence,
    "exam_grading": exam_grading,
    "coin_loans": coin_loans,
}


def write_fixtures(out_dir: str | Path) -> list[Path]:
    """Write every fixture as ``<name>.csv`` into ``out_dir`` and return the paths."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    for name, make in FIXTURES.items():
        path = out / f"{name}.csv"
        path.write_bytes(format_population_csv(make()))
        written.append(path)
    return written
