"""Symmetric group S_n as the Weyl group of sl_n.

Permutations are immutable and stored in one-line notation with 1-indexed
values: ``Permutation((1, 3, 2))`` sends 2 to 3.  The action on weights permutes
eps-coordinates so that sigma(eps_k) = eps_{sigma(k)}.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, List, Sequence, Tuple

from .errors import InvalidIndexError, InvalidInputError
from .rootsys import EpsVector, RankContext


@dataclass(frozen=True)
class Permutation:
    images: Tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise InvalidInputError(f"not a permutation of 1..{len(images)}: {self.images!r}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __len__(self):
        return len(self.images)

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __str__(self):
        return "(" + " ".join(map(str, self.images)) + ")"

    @cached_property
    def length(self) -> int:
        return inversions(self.images)

    @property
    def sign(self) -> int:
        return -1 if self.length % 2 else 1

    @cached_property
    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, x in enumerate(self.images, start=1):
            inv[x - 1] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self.images, start=1))

    def displacement(self) -> int:
        """max |sigma(i) - i|."""
        return max((abs(x - i) for i, x in enumerate(self.images, start=1)), default=0)


def inversions(images: Sequence[int]) -> int:
    n = len(images)
    return sum(1 for i in range(n) for j in range(i + 1, n) if images[i] > images[j])


def length(sigma: Permutation) -> int:
    return sigma.length


def sign(sigma: Permutation) -> int:
    return sigma.sign


def compose(sigma: Permutation, tau: Permutation) -> Permutation:
    """The product sigma*tau, acting as tau first: (sigma*tau)(i) = sigma(tau(i))."""
    if sigma.n != tau.n:
        raise InvalidInputError(f"cannot compose permutations of {sigma.n} and {tau.n} letters")
    return Permutation(tuple(sigma.images[t - 1] for t in tau.images))


def act(sigma: Permutation, xi: Sequence) -> EpsVector:
    """Apply sigma to a weight: coordinate i of the result is xi[sigma^{-1}(i)]."""
    if len(xi) != sigma.n:
        raise InvalidInputError(f"permutation of {sigma.n} letters cannot act on {len(xi)} coordinates")
    out = [None] * sigma.n
    for k, target in enumerate(sigma.images):
        out[target - 1] = xi[k]
    return tuple(out)


def simple_reflection(n: int, i: int) -> Permutation:
    if not 1 <= i <= n - 1:
        raise InvalidIndexError(f"simple reflection index {i} outside 1..{n - 1}")
    images = list(range(1, n + 1))
    images[i - 1], images[i] = images[i], images[i - 1]
    return Permutation(tuple(images))


def product_of_simple_reflections(ctx: RankContext, indices: Iterable[int]) -> Permutation:
    result = Permutation.identity(ctx.n)
    for i in indices:
        result = compose(result, simple_reflection(ctx.n, i))
    return result


def is_commuting_neighbor_product(sigma: Permutation) -> bool:
    """Decide whether sigma is a product of disjoint transpositions (i, i+1).

    Works by peeling off adjacent swaps from the left, independently of the
    displacement characterization it is compared against in the tests.
    """
    images = list(sigma.images)
    i = 0
    while i < len(images):
        if images[i] == i + 1:
            i += 1
        elif i + 1 < len(images) and images[i] == i + 2 and images[i + 1] == i + 1:
            i += 2
        else:
            return False
    return True


# Enumeration in lexicographic order of one-line notation, with ranking so the
# index space 0..n!-1 can be split among independent workers.

def enumerate_permutations(ctx_or_n) -> Iterator[Permutation]:
    n = ctx_or_n.n if isinstance(ctx_or_n, RankContext) else int(ctx_or_n)
    for images in itertools.permutations(range(1, n + 1)):
        yield Permutation(images)


def unrank(n: int, k: int) -> Tuple[int, ...]:
    """The k-th permutation (0-based, lexicographic) of 1..n in one-line notation."""
    total = math.factorial(n)
    if not 0 <= k < total:
        raise InvalidIndexError(f"rank {k} outside 0..{total - 1}")
    pool = list(range(1, n + 1))
    out = []
    for i in range(n, 0, -1):
        f = math.factorial(i - 1)
        q, k = divmod(k, f)
        out.append(pool.pop(q))
    return tuple(out)


def rank(images: Sequence[int]) -> int:
    pool = sorted(images)
    k = 0
    for i, x in enumerate(images):
        pos = pool.index(x)
        k += pos * math.factorial(len(images) - i - 1)
        pool.pop(pos)
    return k


def _next_permutation(a: List[int]) -> bool:
    i = len(a) - 2
    while i >= 0 and a[i] >= a[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = len(a) - 1
    while a[j] <= a[i]:
        j -= 1
    a[i], a[j] = a[j], a[i]
    a[i + 1:] = reversed(a[i + 1:])
    return True


def iter_range(n: int, start: int, stop: int) -> Iterator[Tuple[int, ...]]:
    """One-line tuples with lexicographic ranks in [start, stop)."""
    stop = min(stop, math.factorial(n))
    if start >= stop:
        return
    if start == 0:
        yield from itertools.islice(itertools.permutations(range(1, n + 1)), stop)
        return
    a = list(unrank(n, start))
    for _ in range(stop - start):
        yield tuple(a)
        if not _next_permutation(a):
            return


def split_range(total: int, parts: int) -> List[Tuple[int, int]]:
    """Split 0..total-1 into at most ``parts`` contiguous, ordered, non-empty ranges."""
    parts = max(1, min(parts, total))
    step, extra = divmod(total, parts)
    out, lo = [], 0
    for p in range(parts):
        hi = lo + step + (1 if p < extra else 0)
        out.append((lo, hi))
        lo = hi
    return out
