import json

import pytest

from kostant import verify
from kostant.errors import InvalidInputError, ResourceLimitError
from kostant.qpoly import QPoly
from kostant.serialize import dumps
from kostant.verify import Counterexample, bench_pruning, run_suite


def test_fibonacci_suite_details():
    report = run_suite("fibonacci", (1, 7))
    assert report.passed and report.status == "pass" and report.complete
    assert [d["cardinality"] for d in report.details] == [1, 1, 2, 3, 5, 8, 13]
    assert sorted(report.timings_ms) == list(range(1, 8))


@pytest.mark.parametrize("suite,hi", [
    ("level_counts", 7), ("closed_partition", 7), ("exponents", 5), ("wilf_identity", 40),
    ("nonzero_weights", 3), ("adjoint_table", 3), ("prop12_equivalence", 3),
    ("oracle_equivalence", 2), ("characterization", 5),
])
def test_suites_pass(suite, hi):
    report = run_suite(suite, (1, hi))
    assert report.passed, report.counterexamples
    assert [d["rank"] for d in report.details] == list(range(1, hi + 1))


def test_report_is_deterministic_without_timings():
    a = run_suite("level_counts", (1, 6)).to_dict(timings=False)
    b = run_suite("level_counts", (1, 6)).to_dict(timings=False)
    assert dumps(a) == dumps(b)
    assert "timings_ms" not in a
    assert a["details"][-1]["level_counts"] == [1, 4, 3]


def test_exponents_detail():
    d = run_suite("exponents", (4, 4)).details[0]
    assert d["m_q"] == QPoly([0, 1, 1, 1, 1]) and d["exponents"] == [1, 2, 3, 4]


def test_failure_is_reported_with_witness(monkeypatch):
    def broken(r):
        bad = [Counterexample(r, [1, 0, -1], 2, 3)] if r == 2 else []
        return {"rank": r}, bad

    monkeypatch.setitem(verify.SUITES, "broken", (broken, 5))
    report = run_suite("broken", (1, 3))
    assert report.status == "fail" and not report.passed
    (c,) = report.counterexamples
    assert c.to_dict() == {"rank": 2, "witness": [1, 0, -1], "expected": 2, "actual": 3}
    assert json.loads(dumps(report))["counterexamples"][0]["witness"] == [1, 0, -1]


def test_budget_marks_incomplete():
    report = run_suite("wilf_identity", (1, 200), budget=0)
    assert not report.complete
    assert len(report.details) < 200


def test_ceiling_and_bad_ranges():
    with pytest.raises(ResourceLimitError) as info:
        run_suite("fibonacci", (1, 10))
    assert info.value.ceiling == 9
    assert run_suite("fibonacci", (2, 3), ceiling=3).passed
    with pytest.raises(ResourceLimitError):
        run_suite("fibonacci", (1, 4), ceiling=3)
    with pytest.raises(InvalidInputError):
        run_suite("fibonacci", (3, 2))
    with pytest.raises(InvalidInputError):
        run_suite("fibonacci", (0, 2))
    with pytest.raises(InvalidInputError):
        run_suite("nope", (1, 2))


def test_bench_rows():
    rows = bench_pruning((1, 4))
    assert [(r.rank, r.full_terms, r.alt_terms) for r in rows] == [
        (1, 2, 1), (2, 6, 1), (3, 24, 2), (4, 120, 3)]
    assert all(r.agree for r in rows)
    assert rows[-1].value == QPoly([0, 1, 1, 1, 1])
    with pytest.raises(ResourceLimitError):
        bench_pruning((1, 10))
