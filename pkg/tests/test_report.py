import io
import json
import random

import pytest

from justaudit import AuditConfig, Theory, TheorySpec, build_population, run_audit
from justaudit.errors import (
    BadRowError,
    DuplicateIdError,
    EmptyInputError,
    MissingHeaderError,
    NonFiniteUtilityError,
)
from justaudit.fixtures import FIXTURES, exam_grading, wages_dist1
from justaudit.report import (
    emit_pareto_points,
    emit_report,
    format_population_csv,
    parse_population_csv,
)
from justaudit.selection import CandidateScore, Direction

WAGE_CSV = b"id,group,utility\nAnna,A,10\nBerta,B,20\nAnton,A,30\nBasti,B,40\nAdriana,A,50\nBarbara,B,60\n"


class TestParse:
    def test_wages(self):
        p = parse_population_csv(WAGE_CSV)
        assert p == wages_dist1()

    def test_stream_and_crlf(self):
        p = parse_population_csv(io.BytesIO(WAGE_CSV.replace(b"\n", b"\r\n")))
        assert len(p) == 6

    def test_header_only(self):
        with pytest.raises(EmptyInputError):
            parse_population_csv(b"id,group,utility\n")

    @pytest.mark.parametrize("data", [b"", b"\n", b"name,group,utility\nx,A,1\n", b"id,group\nx,A\n"])
    def test_missing_header(self, data):
        with pytest.raises(MissingHeaderError):
            parse_population_csv(data)

    def test_bad_utility(self):
        with pytest.raises(BadRowError) as err:
            parse_population_csv(b"id,group,utility\nx,A,abc\n")
        assert err.value.row == 2

    def test_wrong_field_count(self):
        with pytest.raises(BadRowError) as err:
            parse_population_csv(b"id,group,utility\nx,A,1\ny,B\n")
        assert err.value.row == 3

    def test_non_finite(self):
        with pytest.raises(NonFiniteUtilityError):
            parse_population_csv(b"id,group,utility\nx,A,nan\n")

    def test_duplicate(self):
        with pytest.raises(DuplicateIdError, match="row 3"):
            parse_population_csv(b"id,group,utility\nx,A,1\nx,B,2\n")

    @pytest.mark.parametrize("flag, expected", [("true", True), ("1", True), ("False", False), ("0", False)])
    def test_deserving(self, flag, expected):
        p = parse_population_csv(f"id,group,utility,deserving\nx,A,1,{flag}\n".encode())
        assert p.records[0].deserving is expected

    def test_bad_deserving(self):
        with pytest.raises(BadRowError):
            parse_population_csv(b"id,group,utility,deserving\nx,A,1,maybe\n")

    def test_round_trip_random(self):
        rng = random.Random(1)
        for _ in range(50):
            rows = [
                (f"id{i}", rng.choice("XYZ"), rng.uniform(-1e6, 1e6), rng.random() < 0.8)
                for i in range(rng.randint(1, 40))
            ]
            p = build_population(rows)
            assert parse_population_csv(format_population_csv(p)) == p


class TestReport:
    def test_wage2_maximin_json(self, wages2):
        report = run_audit(wages2, TheorySpec(Theory.MAXIMIN, tail_fraction=1 / 3))
        doc = json.loads(emit_report(report, "json"))
        assert set(doc) == {"config", "justice", "fairness", "groups", "warnings"}
        assert doc["groups"]["measures"]["group-tail-mean"] == {"A": 40, "B": 10}
        assert doc["fairness"]["verdicts"]["group-tail-mean"]["criterion_holds"] is False
        assert doc["justice"]["metric_value"] == 15
        assert not report.passed

    def test_full_precision(self):
        p = build_population([("a", "A", 0), ("b", "A", 1), ("c", "B", 1), ("d", "B", 1), ("e", "B", 2)])
        report = run_audit(p, TheorySpec("maximin", tail_fraction=0.5))
        doc = json.loads(emit_report(report))
        # worst set {a, b, c}: rates 1 and 1/3; json keeps the exact double
        assert doc["groups"]["measures"]["worst-off-membership-rate"]["A"] == 1.0
        assert doc["groups"]["measures"]["worst-off-membership-rate"]["B"] == 1 / 3

    def test_equal_utilities(self):
        p = build_population((f"i{i}", "ABC"[i % 3], 5) for i in range(9))
        report = run_audit(p, TheorySpec("egalitarian"))
        doc = json.loads(emit_report(report))
        assert doc["justice"]["criterion_holds"] is True
        assert all(v["criterion_holds"] and v["disparity_value"] == 0 for v in doc["fairness"]["verdicts"].values())
        assert report.passed

    def test_small_group_warning(self):
        report = run_audit(exam_grading(), TheorySpec("egalitarian"), AuditConfig(min_group_size=5))
        assert any("'group2'" in w for w in report.warnings)
        assert any("5 record(s) excluded" in w for w in report.warnings)
        text = emit_report(report, "text").decode()
        assert "group2" in text and "warnings" in text

    def test_text_has_four_decimals(self, wages1):
        text = emit_report(run_audit(wages1, TheorySpec("maximin", tail_fraction=1 / 3)), "text").decode()
        assert "15.0000" in text and "0.3333" in text

    def test_ratio_undefined_is_reported_as_null(self, wages2):
        report = run_audit(wages2, TheorySpec("maximin", tail_fraction=1 / 3), AuditConfig(disparity="max-ratio"))
        doc = json.loads(emit_report(report))
        assert doc["fairness"]["verdicts"]["worst-off-membership-rate"]["disparity"]["value"] is None
        assert doc["fairness"]["verdicts"]["group-tail-mean"]["disparity"]["value"] == 4

    def test_naive_section(self, suff_fixture):
        theory = TheorySpec("sufficientarian", threshold=10)
        plain = run_audit(suff_fixture, theory)
        naive = run_audit(suff_fixture, theory, include_naive=True)
        doc = json.loads(emit_report(naive))
        assert doc["fairness"]["naive_baselines"] == {
            "contrast_only": True,
            "naive_sufficientarian_group_check": {"g1": False, "g2": True},
        }
        assert naive.passed == plain.passed

    def test_leveling_up_gates_on_higher_is_better(self, wages1):
        cfg = AuditConfig(pattern="leveling-up", leveling_up_threshold=5)
        report = run_audit(wages1, TheorySpec("maximin", tail_fraction=1 / 3), cfg)
        assert report.gated_measures() == ["group-tail-mean"]
        assert report.fairness_passed

    def test_deterministic(self):
        for make in FIXTURES.values():
            a = emit_report(run_audit(make(), TheorySpec("egalitarian"), include_naive=True))
            b = emit_report(run_audit(make(), TheorySpec("egalitarian"), include_naive=True))
            assert a == b


class TestParetoCsv:
    def test_rows(self):
        scores = [
            CandidateScore("dist2", 15.0, Direction.MAXIMIZE, 30.0, False),
            CandidateScore("dist1", 15.0, Direction.MAXIMIZE, 10.0, True),
        ]
        assert emit_pareto_points(scores, ["dist1"]) == (
            b"name,justice_value,fairness_disparity,on_front\n"
            b"dist1,15.0,10.0,true\n"
            b"dist2,15.0,30.0,false\n"
        )

    def test_single(self):
        out = emit_pareto_points([CandidateScore("a", 1.0, Direction.MAXIMIZE, 0.0, True)], ["a"])
        assert out.decode().splitlines()[1] == "a,1.0,0.0,true"

    def test_empty(self):
        assert emit_pareto_points([], []) == b"name,justice_value,fairness_disparity,on_front\n"
