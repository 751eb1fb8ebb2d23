import random

import pytest

from justaudit import AuditConfig, Direction, Theory, TheorySpec, build_population
from justaudit.errors import CandidateError, NoFeasibleCandidateError
from justaudit.selection import (
    Candidate,
    CandidateScore,
    lexical_select,
    pareto_front,
    score_candidates,
)

MAXIMIN_THIRD = TheorySpec(Theory.MAXIMIN, tail_fraction=1 / 3)


def score(name, justice, gap, passes=True, direction=Direction.MAXIMIZE):
    return CandidateScore(name, justice, direction, gap, passes)


def brute_front(scores):
    """Oracle with its own dominance test; minimizing justice is flipped by hand."""

    def key(s):
        j = s.justice_value if s.justice_direction is Direction.MAXIMIZE else -s.justice_value
        return j, -s.fairness_disparity

    front = []
    for s in scores:
        sj, sf = key(s)
        beaten = False
        for o in scores:
            if o is s:
                continue
            oj, of = key(o)
            if oj >= sj and of >= sf and (oj, of) != (sj, sf):
                beaten = True
        if not beaten:
            front.append(s.name)
    return front


@pytest.fixture
def wage_scores(wages1, wages2):
    cands = [Candidate("dist1", wages1), Candidate("dist2", wages2)]
    return score_candidates(cands, MAXIMIN_THIRD, AuditConfig(), fairness_constraint=15)


def test_wage_scores(wage_scores):
    d1, d2 = wage_scores
    assert (d1.justice_value, d1.fairness_disparity, d1.passes_fairness) == (15, 10, True)
    assert (d2.justice_value, d2.fairness_disparity, d2.passes_fairness) == (15, 30, False)


def test_single_candidate(wages1):
    assert len(score_candidates([Candidate("only", wages1)], MAXIMIN_THIRD)) == 1


def test_error_names_candidate(wages1):
    bad = build_population([("x", "A", 0), ("y", "B", 1)])
    cfg = AuditConfig(justice_metric="range-ratio")
    with pytest.raises(CandidateError, match="broken"):
        score_candidates([Candidate("ok", wages1), Candidate("broken", bad)], TheorySpec("egalitarian"), cfg)


def test_duplicate_names(wages1):
    with pytest.raises(ValueError):
        score_candidates([Candidate("a", wages1), Candidate("a", wages1)], MAXIMIN_THIRD)


def test_leveling_up_pattern(wages1, wages2):
    cfg = AuditConfig(pattern="leveling-up", leveling_up_threshold=15)
    s1, s2 = score_candidates([Candidate("d1", wages1), Candidate("d2", wages2)], MAXIMIN_THIRD, cfg)
    # group tail means: d1 {10, 20}, d2 {40, 10}
    assert s1.passes_leveling_up is False and s1.passes_fairness is False
    assert s2.passes_leveling_up is False


class TestLexical:
    def test_wages(self, wage_scores):
        assert lexical_select(wage_scores) == "dist1"

    def test_none_feasible(self):
        with pytest.raises(NoFeasibleCandidateError):
            lexical_select([score("a", 1, 9, passes=False)])

    def test_tie_by_name(self):
        assert lexical_select([score("b", 5, 0), score("a", 5, 1)]) == "a"

    def test_minimize_direction(self):
        scores = [score("lo", 0.1, 0, direction=Direction.MINIMIZE), score("hi", 0.5, 0, direction=Direction.MINIMIZE)]
        assert lexical_select(scores) == "lo"


class TestPareto:
    def test_wages(self, wage_scores):
        assert pareto_front(wage_scores) == ["dist1"]

    def test_single(self):
        assert pareto_front([score("a", 1, 1)]) == ["a"]

    def test_incomparable(self):
        assert pareto_front([score("a", 10, 5), score("b", 20, 20)]) == ["a", "b"]

    def test_duplicates_both_on_front(self):
        assert pareto_front([score("a", 1, 1), score("b", 1, 1)]) == ["a", "b"]

    def test_random_against_oracle(self):
        rng = random.Random(9)
        for _ in range(200):
            direction = rng.choice(list(Direction))
            scores = [
                score(f"c{i}", rng.randint(0, 6), rng.randint(0, 6), direction=direction)
                for i in range(rng.randint(1, 10))
            ]
            assert pareto_front(scores) == brute_front(scores)

    def test_adding_dominated_keeps_front(self):
        rng = random.Random(4)
        for _ in range(100):
            scores = [score(f"c{i}", rng.randint(1, 9), rng.randint(1, 9)) for i in range(rng.randint(1, 8))]
            front = pareto_front(scores)
            worst = score("extra", 0, 10)
            assert [n for n in pareto_front(scores + [worst]) if n != "extra"] == front

    def test_lexical_winner_on_front(self):
        rng = random.Random(6)
        for _ in range(200):
            n = rng.randint(1, 10)
            justice = rng.sample(range(100), n)
            gaps = rng.sample(range(100), n)
            limit = rng.randint(0, 100)
            scores = [score(f"c{i}", j, g, passes=g <= limit) for i, (j, g) in enumerate(zip(justice, gaps))]
            if not any(s.passes_fairness for s in scores):
                continue
            winner = lexical_select(scores)
            assert winner in pareto_front(scores)
