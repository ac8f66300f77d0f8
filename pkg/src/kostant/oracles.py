"""Slow reference implementations used only to audit the fast code paths."""

from __future__ import annotations

from typing import Dict, Sequence

from .rootsys import RankContext


def _height(ctx: RankContext, xi: Sequence[int]) -> int:
    # height in simple-root coordinates = sum of the partial sums
    total, acc = 0, 0
    for a in xi[:-1]:
        acc += a
        total += acc
    return total


def naive_kostant_by_parts(ctx: RankContext, xi: Sequence[int]) -> Dict[int, int]:
    """Enumerate coefficient vectors over the positive roots, bounded only by total height.

    Returns {number of roots used: count}.  No memoization and no per-coordinate
    bounds, so it shares nothing with the dynamic program it is compared to.
    """
    xi = tuple(xi)
    if sum(xi) != 0:
        return {}
    roots = list(ctx.positive_roots)
    heights = [b.index(-1) - b.index(1) for b in roots]
    budget = _height(ctx, xi)
    found: Dict[int, int] = {}
    coeffs = [0] * len(roots)

    def rec(idx, left):
        if idx == len(roots):
            if left == 0:
                vec = tuple(sum(c * b[k] for c, b in zip(coeffs, roots)) for k in range(ctx.n))
                if vec == xi:
                    parts = sum(coeffs)
                    found[parts] = found.get(parts, 0) + 1
            return
        h = heights[idx]
        for c in range(left // h + 1):
            coeffs[idx] = c
            rec(idx + 1, left - c * h)
        coeffs[idx] = 0

    if budget >= 0:
        rec(0, budget)
    return found


def naive_kostant(ctx: RankContext, xi: Sequence[int]) -> int:
    return sum(naive_kostant_by_parts(ctx, xi).values())
