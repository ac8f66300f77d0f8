"""Kostant's partition function for type A and its q-analog.

Both are computed by a depth-first walk over the positive roots eps_i - eps_j
in lexicographic (i, j) order.  When the walk reaches the roots starting at i,
every coordinate before i has already been cleared, so the residual's i-th
coordinate equals its running i-th partial sum and bounds how many copies of
each root eps_i - eps_j may still be used.  The last root of each group,
eps_i - eps_n, takes whatever is left, which keeps the branching small.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Optional, Sequence

from .errors import InvalidInputError
from .qpoly import QPoly
from .rootsys import EpsVector, RankContext, format_vector, is_integer_vector


@dataclass
class PartitionQuery:
    ctx: RankContext
    target: EpsVector

    def __post_init__(self):
        self.target = _integer_target(self.ctx, self.target)


@dataclass
class PartitionCache:
    """Memo tables keyed by (root index, residual); valid for a single rank."""

    n: int
    counts: Dict = field(default_factory=dict)
    qcounts: Dict = field(default_factory=dict)

    def clear(self):
        self.counts.clear()
        self.qcounts.clear()


def _integer_target(ctx: RankContext, target: Sequence) -> EpsVector:
    vec = ctx.check(target, "partition target")
    if not is_integer_vector(vec):
        raise InvalidInputError(f"partition target {format_vector(vec)} has non-integer entries")
    return vec


def _root_pairs(n: int):
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def _resolve_cache(ctx, cache):
    if cache is None:
        return PartitionCache(ctx.n)
    if cache.n != ctx.n:
        raise InvalidInputError(f"cache built for n={cache.n} used with n={ctx.n}")
    return cache


def _unpack(q, target):
    if isinstance(q, PartitionQuery):
        return q.ctx, q.target
    return q, _integer_target(q, target)


def make_counter(n: int, memo: dict):
    """Return ``walk(idx, residual)`` counting expressions with roots idx, idx+1, ..."""
    roots = _root_pairs(n)
    last = len(roots)

    def walk(idx, res):
        if idx == last:
            return 1 if not any(res) else 0
        key = (idx, res)
        hit = memo.get(key)
        if hit is not None:
            return hit
        i, j = roots[idx]
        budget = res[i]
        if budget < 0:
            total = 0
        elif j == n - 1:
            nxt = list(res)
            nxt[i] = 0
            nxt[j] += budget
            total = walk(idx + 1, tuple(nxt))
        else:
            total = 0
            nxt = list(res)
            for _ in range(budget + 1):
                total += walk(idx + 1, tuple(nxt))
                nxt[i] -= 1
                nxt[j] += 1
        memo[key] = total
        return total

    return walk


def kostant(q, target: Sequence | None = None, cache: Optional[PartitionCache] = None) -> int:
    """Number of ways to write ``target`` as a non-negative integral sum of positive roots.

    Accepts either a :class:`PartitionQuery` or ``(ctx, target)``.  Vectors with
    nonzero coordinate sum are outside the root lattice and give 0.
    """
    ctx, vec = _unpack(q, target)
    if sum(vec) != 0:
        return 0
    walk = make_counter(ctx.n, _resolve_cache(ctx, cache).counts)
    return walk(0, tuple(vec))


def _add_shifted(acc: list, part: tuple, shift: int) -> None:
    need = len(part) + shift
    if len(acc) < need:
        acc.extend([0] * (need - len(acc)))
    for k, c in enumerate(part):
        acc[k + shift] += c


def make_q_counter(n: int, memo: dict):
    """Like :func:`make_counter`, but ``walk`` returns counts indexed by number of roots used."""
    roots = _root_pairs(n)
    last = len(roots)

    def walk(idx, res):
        if idx == last:
            return (1,) if not any(res) else ()
        key = (idx, res)
        hit = memo.get(key)
        if hit is not None:
            return hit
        i, j = roots[idx]
        budget = res[i]
        acc: list = []
        if budget >= 0:
            if j == n - 1:
                nxt = list(res)
                nxt[i] = 0
                nxt[j] += budget
                _add_shifted(acc, walk(idx + 1, tuple(nxt)), budget)
            else:
                nxt = list(res)
                for c in range(budget + 1):
                    _add_shifted(acc, walk(idx + 1, tuple(nxt)), c)
                    nxt[i] -= 1
                    nxt[j] += 1
        while acc and acc[-1] == 0:
            acc.pop()
        out = tuple(acc)
        memo[key] = out
        return out

    return walk


def kostant_q(q, target: Sequence | None = None, cache: Optional[PartitionCache] = None) -> QPoly:
    """q-analog: the coefficient of q^j counts expressions using exactly j positive roots."""
    ctx, vec = _unpack(q, target)
    if sum(vec) != 0:
        return QPoly()
    walk = make_q_counter(ctx.n, _resolve_cache(ctx, cache).qcounts)
    return QPoly(walk(0, tuple(vec)))


def is_positive(q, target: Sequence | None = None) -> bool:
    """Partial-sum test: the partition function is positive iff every (varpi_i, xi) >= 0."""
    ctx, vec = _unpack(q, target)
    if sum(vec) != 0:
        return False
    acc = 0
    for a in vec[:-1]:
        acc += a
        if acc < 0:
            return False
    return True
