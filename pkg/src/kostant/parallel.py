"""Split an S_n scan over worker processes by lexicographic rank ranges."""

from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor

from .weyl import split_range

THREADS_ENV = "KOSTANT_THREADS"


def resolve_workers(threads=None) -> int:
    """None reads $KOSTANT_THREADS (default 1); 0 means one per CPU."""
    if threads is None:
        raw = os.environ.get(THREADS_ENV, "1")
        try:
            threads = int(raw)
        except ValueError:
            raise ValueError(f"{THREADS_ENV} must be an integer, got {raw!r}") from None
    if threads < 0:
        raise ValueError("thread count must be >= 0")
    if threads == 0:
        threads = os.cpu_count() or 1
    return threads


def map_ranges(func, n: int, workers: int, *args):
    """Call ``func(n, start, stop, *args)`` on disjoint rank ranges, results in rank order."""
    ranges = split_range(math.factorial(n), workers)
    if len(ranges) == 1:
        return [func(n, *ranges[0], *args)]
    with ProcessPoolExecutor(max_workers=len(ranges)) as pool:
        futures = [pool.submit(func, n, lo, hi, *args) for lo, hi in ranges]
        return [f.result() for f in futures]
