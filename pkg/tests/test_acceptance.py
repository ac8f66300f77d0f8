"""Acceptance gate: one test per criterion, each emitting a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py`` (lines appear in the summary) or
directly with ``python3 tests/test_acceptance.py``.
"""

import time

import pytest

from kostant import formulas
from kostant.altset import altset_bruteforce
from kostant.rootsys import make_context
from kostant.verify import bench_pruning, run_suite

try:
    from conftest import ACCEPTANCE_LINES
except ImportError:  # pragma: no cover - imported outside pytest
    ACCEPTANCE_LINES = []


def record(number, title, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:>2}: {title} ({detail})"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def suite_ok(name, lo, hi):
    t0 = time.perf_counter()
    report = run_suite(name, (lo, hi))
    elapsed = time.perf_counter() - t0
    ok = report.passed and report.complete and len(report.details) == hi - lo + 1
    return report, ok, elapsed


def test_criterion_01_fibonacci_cardinality():
    want = (1, 1, 2, 3, 5, 8, 13, 21, 34)
    got = []
    t0 = time.perf_counter()
    for r in range(1, 9):
        ctx = make_context(r)
        got.append(len(altset_bruteforce(ctx, ctx.highest_root, ctx.zero())))
    small = time.perf_counter() - t0
    ctx = make_context(9)
    t0 = time.perf_counter()
    got.append(len(altset_bruteforce(ctx, ctx.highest_root, ctx.zero())))
    big = time.perf_counter() - t0
    ok = tuple(got) == want and small < 10 and big < 120
    record(1, "brute-force |A(highest root, 0)| is Fibonacci for r=1..9", ok,
           f"sizes {got}, r<=8 in {small:.2f}s, r=9 in {big:.2f}s")


def test_criterion_02_characterization_equivalence():
    report, ok, t = suite_ok("characterization", 1, 7)
    record(2, "three membership predicates agree on S_n for n<=8", ok,
           f"{len(report.counterexamples)} discrepancies, {t:.1f}s")


def test_criterion_03_exponents():
    report, ok, t = suite_ok("exponents", 1, 8)
    ok = ok and all(d["exponents"] == list(range(1, d["rank"] + 1)) for d in report.details)
    record(3, "full-sum m_q(highest root, 0) = q + ... + q^r for r=1..8", ok,
           f"{len(report.counterexamples)} mismatches, {t:.1f}s")


def test_criterion_04_closed_partition_forms():
    report, ok, t = suite_ok("closed_partition", 1, 8)
    checked = sum(d["checked"] for d in report.details)
    ok = ok and checked == sum(formulas.fibonacci(r) for r in range(1, 9))
    record(4, "partition values on A(highest root, 0) match closed forms for r=1..8", ok,
           f"{checked} elements checked, {len(report.counterexamples)} mismatches")


def test_criterion_05_level_counts():
    report, ok, t = suite_ok("level_counts", 1, 9)
    ok = ok and all(d["max_length"] == (d["rank"] - 1) // 2 for d in report.details)
    record(5, "length distribution is C(r-1-k, k) for r=1..9", ok,
           f"{len(report.counterexamples)} mismatches, r=9 levels {report.details[-1]['level_counts']}")


def test_criterion_06_wilf_identity():
    report, ok, t = suite_ok("wilf_identity", 1, 200)
    ok = ok and t < 5
    record(6, "alternating Fibonacci-polynomial identity for r=1..200 in under 5s", ok,
           f"{len(report.counterexamples)} mismatches, {t:.2f}s")


def test_criterion_07_nonzero_weights():
    report, ok, t = suite_ok("nonzero_weights", 3, 4)
    scanned = sum(d["weights_scanned"] for d in report.details)
    ok = ok and scanned == (4 ** 3 - 1) + (4 ** 4 - 1)
    ok = ok and [d["nonempty_at"] for d in report.details] == [[[1, 0, 1]], [[1, 0, 0, 1]]]
    record(7, "A(highest root, mu) for dominant mu != 0 is {id} iff mu is the highest root", ok,
           f"{scanned} weights scanned, {len(report.counterexamples)} exceptions")


def test_criterion_08_adjoint_decomposition():
    report, ok, t = suite_ok("adjoint_table", 1, 5)
    ok = ok and all(d["multiplicity_one"] == (d["rank"] + 1) * d["rank"] for d in report.details)
    scanned = sum(d["weights_scanned"] for d in report.details)
    record(8, "adjoint weight multiplicities on the [-2, 2] box for r<=5", ok,
           f"{scanned} weights scanned, {len(report.counterexamples)} mismatches, {t:.1f}s")


def test_criterion_09_positivity_criterion():
    report, ok, t = suite_ok("prop12_equivalence", 1, 3)
    scanned = sum(d["vectors_scanned"] for d in report.details)
    record(9, "partial-sum test agrees with partition value > 0 on the [-4, 4] grid, n<=4", ok,
           f"{scanned} vectors, {len(report.counterexamples)} disagreements")


def test_criterion_10_oracle_equivalence():
    report, ok, t = suite_ok("oracle_equivalence", 1, 3)
    scanned = sum(d["vectors_scanned"] for d in report.details)
    record(10, "memoized partition function matches the naive oracle and its q-analog at q=1", ok,
           f"{scanned} vectors, {len(report.counterexamples)} disagreements")


def test_criterion_11_pruning_benchmark():
    (row,) = bench_pruning((8, 8))
    ok = row.full_terms == 362880 and row.alt_terms == 21 and row.agree
    ok = ok and row.value == formulas.exponent_poly(8)
    record(11, "pruned m_q at r=8 touches 21 permutations against 362880", ok,
           f"full {row.full_terms} terms in {row.full_time_us / 1e6:.2f}s, "
           f"pruned {row.alt_terms} terms in {row.pruned_time_us / 1e6:.2f}s, agree={row.agree}")


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q"]))
