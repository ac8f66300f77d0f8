"""Rank-by-rank comparison of closed forms against brute-force computation.

Each suite maps a rank r to ``(detail, counterexamples)``.  The brute-force
side comes from enumeration (altset, partition, multiplicity, oracles); the
expected side comes from :mod:`kostant.formulas` or a direct classification.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Dict, List, Optional, Tuple

from . import formulas
from .altset import (
    altset_bruteforce,
    altset_closed_nonzero,
    max_length,
    member_by_displacement,
    member_by_partition,
    member_by_reflections,
)
from .errors import InvalidInputError, ResourceLimitError
from .multiplicity import adjoint_multiplicity, mult, mult_q
from .oracles import naive_kostant_by_parts
from .partition import PartitionCache, is_positive, kostant, kostant_q
from .qpoly import QPoly
from .rootsys import from_fundamental_coeffs, make_context, sub
from .weyl import enumerate_permutations


@dataclass(frozen=True)
class Counterexample:
    rank: int
    witness: object
    expected: object
    actual: object

    def to_dict(self):
        return {"rank": self.rank, "witness": self.witness, "expected": self.expected, "actual": self.actual}


@dataclass
class VerificationReport:
    suite: str
    rank_range: Tuple[int, int]
    counterexamples: List[Counterexample] = field(default_factory=list)
    details: List[dict] = field(default_factory=list)
    timings_ms: Dict[int, int] = field(default_factory=dict)
    complete: bool = True

    @property
    def status(self) -> str:
        return "fail" if self.counterexamples else "pass"

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def to_dict(self, timings: bool = True):
        out = {
            "suite": self.suite,
            "rank_range": list(self.rank_range),
            "status": self.status,
            "complete": self.complete,
            "counterexamples": [c.to_dict() for c in self.counterexamples],
            "details": self.details,
        }
        if timings:
            out["timings_ms"] = {str(r): t for r, t in self.timings_ms.items()}
        return out


@lru_cache(maxsize=None)
def _brute_zero(r: int):
    ctx = make_context(r)
    return altset_bruteforce(ctx, ctx.highest_root, ctx.zero())


def _fibonacci(r):
    got = len(_brute_zero(r))
    want = formulas.fibonacci(r)
    bad = [] if got == want else [Counterexample(r, "|A(highest root, 0)|", want, got)]
    return {"rank": r, "cardinality": got, "expected": want}, bad


def _level_counts(r):
    ctx = make_context(r)
    alt = _brute_zero(r)
    observed = alt.level_counts()
    top = max(formulas.max_length(r), max(observed))
    bad = []
    for k in range(top + 1):
        want, got = formulas.level_count(r, k), observed.get(k, 0)
        if want != got:
            bad.append(Counterexample(r, f"length {k}", want, got))
    if alt.max_length() != max_length(ctx):
        bad.append(Counterexample(r, "max length", max_length(ctx), alt.max_length()))
    return {"rank": r, "level_counts": [observed.get(k, 0) for k in range(top + 1)],
            "max_length": alt.max_length()}, bad


def _swap_indices(images):
    return [i for i in range(1, len(images)) if images[i - 1] == i + 1]


def _closed_partition(r):
    ctx = make_context(r)
    cache = PartitionCache(ctx.n)
    bad = []
    for e in _brute_zero(r):
        ell = e.length
        pq = kostant_q(ctx, e.translate, cache)
        want_q = formulas.closed_partition_q(r, ell)
        if pq != want_q:
            bad.append(Counterexample(r, e.sigma, want_q, pq))
        p = kostant(ctx, e.translate, cache)
        if p != formulas.closed_partition(r, ell):
            bad.append(Counterexample(r, e.sigma, formulas.closed_partition(r, ell), p))
        want_vec = ctx.highest_root
        for i in _swap_indices(e.sigma.images):
            want_vec = sub(want_vec, ctx.simple_roots[i - 1])
        if e.translate != want_vec:
            bad.append(Counterexample(r, e.sigma, want_vec, e.translate))
        pairings = set(itertools.accumulate(e.translate[:-1]))
        if not pairings <= {0, 1}:
            bad.append(Counterexample(r, e.sigma, "pairings in {0, 1}", sorted(pairings)))
    return {"rank": r, "checked": len(_brute_zero(r))}, bad


def _exponents(r):
    ctx = make_context(r)
    res = mult_q(ctx, ctx.highest_root, ctx.zero(), "full_sum")
    want = formulas.exponent_poly(r)
    bad = []
    if res.value != want:
        bad.append(Counterexample(r, "m_q(highest root, 0)", want, res.value))
    m = mult(ctx, ctx.highest_root, ctx.zero(), "full_sum").value
    if m != r:
        bad.append(Counterexample(r, "m(highest root, 0)", r, m))
    exps = [e for e, c in res.value.terms() for _ in range(c)] if res.value.is_nonnegative() else None
    return {"rank": r, "m_q": res.value, "exponents": exps, "terms_evaluated": res.terms_evaluated}, bad


def _wilf_identity(r):
    lhs = formulas.alternating_sum(r)
    bad = []
    if lhs != formulas.exponent_poly(r):
        bad.append(Counterexample(r, "alternating sum vs q + ... + q^r", formulas.exponent_poly(r), lhs))
    geo = formulas.geometric_times_q(r)
    if lhs != geo:
        bad.append(Counterexample(r, "alternating sum vs q(1 - q^r)/(1 - q)", geo, lhs))
    ft = formulas.fibonacci_t(r)
    if ft(1) != formulas.fibonacci(r):
        bad.append(Counterexample(r, "F_r(1)", formulas.fibonacci(r), ft(1)))
    return {"rank": r, "degree": lhs.degree}, bad


NONZERO_COEFF_BOUND = 3


def _nonzero_weights(r):
    ctx = make_context(r)
    bad = []
    scanned = 0
    singletons = []
    for coeffs in itertools.product(range(NONZERO_COEFF_BOUND + 1), repeat=r):
        if not any(coeffs):
            continue
        mu = from_fundamental_coeffs(ctx, coeffs)
        brute = altset_bruteforce(ctx, ctx.highest_root, mu)
        closed = altset_closed_nonzero(ctx, mu)
        scanned += 1
        if brute.image_set() != closed.image_set():
            bad.append(Counterexample(r, {"fundamental_coeffs": list(coeffs)},
                                      sorted(closed.image_set()), sorted(brute.image_set())))
        if len(brute):
            singletons.append(list(coeffs))
    return {"rank": r, "weights_scanned": scanned, "nonempty_at": singletons}, bad


ADJOINT_BOX = 2


def _adjoint_table(r):
    ctx = make_context(r)
    roots = set(ctx.roots())
    bad = []
    scanned = root_hits = 0
    for mu in itertools.product(range(-ADJOINT_BOX, ADJOINT_BOX + 1), repeat=ctx.n):
        if sum(mu):
            continue
        scanned += 1
        if not any(mu):
            want = r
        elif mu in roots:
            want = 1
        else:
            want = 0
        got = mult(ctx, ctx.highest_root, mu, "full_sum").value
        closed = adjoint_multiplicity(ctx, mu)
        if got != want:
            bad.append(Counterexample(r, list(mu), want, got))
        if closed != got:
            bad.append(Counterexample(r, list(mu), got, closed))
        root_hits += got == 1 and any(mu)
    if root_hits != ctx.n * (ctx.n - 1):
        bad.append(Counterexample(r, "weights of multiplicity 1", ctx.n * (ctx.n - 1), root_hits))
    return {"rank": r, "weights_scanned": scanned, "multiplicity_one": root_hits}, bad


GRID_BOX = 4


def _grid(n):
    for v in itertools.product(range(-GRID_BOX, GRID_BOX + 1), repeat=n):
        if sum(v) == 0:
            yield v


def _positivity_criterion(r):
    ctx = make_context(r)
    cache = PartitionCache(ctx.n)
    bad = []
    scanned = 0
    for v in _grid(ctx.n):
        scanned += 1
        fast, slow = is_positive(ctx, v), kostant(ctx, v, cache) > 0
        if fast != slow:
            bad.append(Counterexample(r, list(v), slow, fast))
    return {"rank": r, "vectors_scanned": scanned}, bad


def _oracle(r):
    ctx = make_context(r)
    cache = PartitionCache(ctx.n)
    bad = []
    scanned = 0
    for v in _grid(ctx.n):
        scanned += 1
        parts = naive_kostant_by_parts(ctx, v)
        want = QPoly.from_dict(parts)
        pq = kostant_q(ctx, v, cache)
        p = kostant(ctx, v, cache)
        if p != want.eval_at_one():
            bad.append(Counterexample(r, list(v), want.eval_at_one(), p))
        if pq != want:
            bad.append(Counterexample(r, list(v), want, pq))
        if pq.eval_at_one() != p:
            bad.append(Counterexample(r, list(v), p, pq.eval_at_one()))
    return {"rank": r, "vectors_scanned": scanned}, bad


def _characterization(r):
    ctx = make_context(r)
    cache = PartitionCache(ctx.n)
    bad = []
    members = 0
    for sigma in enumerate_permutations(ctx):
        a = member_by_partition(ctx, sigma, cache)
        b = member_by_displacement(sigma)
        c = member_by_reflections(ctx, sigma)
        if not a == b == c:
            bad.append(Counterexample(r, sigma, {"partition": a}, {"displacement": b, "reflections": c}))
        members += a
    return {"rank": r, "members": members}, bad


# name -> (per-rank check, default maximum rank)
SUITES: Dict[str, Tuple[Callable, int]] = {
    "fibonacci": (_fibonacci, 9),
    "level_counts": (_level_counts, 9),
    "closed_partition": (_closed_partition, 9),
    "exponents": (_exponents, 9),
    "wilf_identity": (_wilf_identity, 200),
    "nonzero_weights": (_nonzero_weights, 5),
    "adjoint_table": (_adjoint_table, 5),
    "prop12_equivalence": (_positivity_criterion, 3),
    "oracle_equivalence": (_oracle, 3),
    "characterization": (_characterization, 7),
}


def run_suite(suite: str, rank_range, budget: Optional[float] = None,
              ceiling: Optional[int] = None) -> VerificationReport:
    """Run ``suite`` for every rank in the inclusive ``rank_range``.

    ``budget`` is a wall-clock limit in seconds; when it runs out the report is
    returned with ``complete = False`` and covers only the ranks finished.
    """
    if suite not in SUITES:
        raise InvalidInputError(f"unknown suite {suite!r}; choose from {sorted(SUITES)}")
    check, default_ceiling = SUITES[suite]
    lo, hi = rank_range
    if lo < 1 or hi < lo:
        raise InvalidInputError(f"invalid rank range {lo}..{hi}")
    limit = default_ceiling if ceiling is None else ceiling
    if hi > limit:
        raise ResourceLimitError(f"suite {suite} is limited to rank <= {limit}, requested {hi}", limit)
    report = VerificationReport(suite, (lo, hi))
    started = time.perf_counter()
    for r in range(lo, hi + 1):
        if budget is not None and time.perf_counter() - started > budget:
            report.complete = False
            break
        t0 = time.perf_counter()
        detail, bad = check(r)
        report.timings_ms[r] = int((time.perf_counter() - t0) * 1000)
        report.details.append(detail)
        report.counterexamples.extend(bad)
    return report


@dataclass
class BenchRow:
    rank: int
    full_terms: int
    alt_terms: int
    full_time_us: int
    pruned_time_us: int
    agree: bool
    value: QPoly

    def to_dict(self):
        return {"rank": self.rank, "full_terms": self.full_terms, "alt_terms": self.alt_terms,
                "full_time_us": self.full_time_us, "pruned_time_us": self.pruned_time_us,
                "agree": self.agree, "value": self.value}


def bench_pruning(rank_range, ceiling: int = 9) -> List[BenchRow]:
    """Time m_q(highest root, 0) with the full Weyl sum and with positivity pruning."""
    lo, hi = rank_range
    if hi > ceiling:
        raise ResourceLimitError(f"benchmark is limited to rank <= {ceiling}, requested {hi}", ceiling)
    rows = []
    for r in range(lo, hi + 1):
        ctx = make_context(r)
        t0 = time.perf_counter()
        full = mult_q(ctx, ctx.highest_root, ctx.zero(), "full_sum", ceiling=ceiling + 1)
        t1 = time.perf_counter()
        pruned = mult_q(ctx, ctx.highest_root, ctx.zero(), "positivity_pruned", ceiling=ceiling + 1)
        t2 = time.perf_counter()
        rows.append(BenchRow(r, full.terms_evaluated, pruned.terms_evaluated,
                             int((t1 - t0) * 1e6), int((t2 - t1) * 1e6),
                             full.value == pruned.value, full.value))
    return rows
