"""Weyl alternation sets: the permutations that actually contribute to the
alternating sum over S_n in Kostant's multiplicity formula.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, Sequence, Tuple

from . import formulas
from .errors import InvalidInputError, InvalidWeightError, ResourceLimitError
from .parallel import map_ranges, resolve_workers
from .partition import PartitionCache, is_positive, kostant
from .rootsys import (
    EpsVector,
    RankContext,
    add,
    format_vector,
    in_root_lattice,
    is_dominant,
    is_integral_weight,
    sub,
)
from .weyl import Permutation, act, iter_range, product_of_simple_reflections

DEFAULT_CEILING = 10


@dataclass(frozen=True)
class AltElement:
    sigma: Permutation
    length: int
    sign: int
    translate: EpsVector


@dataclass(frozen=True)
class AltSet:
    ctx: RankContext
    lam: EpsVector
    mu: EpsVector
    elements: Tuple[AltElement, ...]

    def __len__(self):
        return len(self.elements)

    def __iter__(self) -> Iterator[AltElement]:
        return iter(self.elements)

    def permutations(self) -> List[Permutation]:
        return [e.sigma for e in self.elements]

    def image_set(self) -> frozenset:
        return frozenset(e.sigma.images for e in self.elements)

    def level_counts(self) -> dict:
        counts: dict = {}
        for e in self.elements:
            counts[e.length] = counts.get(e.length, 0) + 1
        return dict(sorted(counts.items()))

    def max_length(self):
        return max((e.length for e in self.elements), default=None)


def check_dominant(ctx: RankContext, v: Sequence, what: str = "weight") -> EpsVector:
    vec = ctx.check(v, what)
    if not is_integral_weight(vec):
        raise InvalidWeightError(f"{what} {format_vector(vec)} is not an integral weight")
    if not is_dominant(vec):
        raise InvalidWeightError(f"{what} {format_vector(vec)} is not dominant (coordinates must weakly decrease)")
    return vec


def translate(ctx: RankContext, sigma: Permutation, lam: Sequence, mu: Sequence) -> EpsVector:
    """sigma(lam + rho) - (mu + rho)."""
    return sub(act(sigma, add(lam, ctx.rho)), add(mu, ctx.rho))


def shifted_pair(ctx: RankContext, lam: Sequence, mu: Sequence):
    """Integer vectors (lam + rho - f, mu + rho - f) sharing the fractional offset f.

    Returns None when lam - mu is outside the root lattice; then every
    translate is non-integral and the alternation set is empty.
    """
    if not in_root_lattice(sub(lam, mu)):
        return None
    f = Fraction(lam[0]) % 1
    lr = tuple(Fraction(a + b - f) for a, b in zip(lam, ctx.rho))
    mr = tuple(Fraction(a + b - f) for a, b in zip(mu, ctx.rho))
    if any(x.denominator != 1 for x in lr):
        raise InvalidWeightError(f"{format_vector(lam)} is not an integral weight")
    return tuple(map(int, lr)), tuple(map(int, mr))


def _translate_from_images(images, lr, mr):
    vals = [0] * len(images)
    for k, t in enumerate(images):
        vals[t - 1] = lr[k]
    return tuple(v - m for v, m in zip(vals, mr))


def scan_chunk(n: int, start: int, stop: int, lr, mr) -> List[Tuple[Tuple[int, ...], EpsVector]]:
    """Survivors of the partial-sum test among permutations with rank in [start, stop)."""
    out = []
    last = n - 1
    for images in iter_range(n, start, stop):
        vals = [0] * n
        for k, t in enumerate(images):
            vals[t - 1] = lr[k]
        acc = 0
        for i in range(last):
            acc += vals[i] - mr[i]
            if acc < 0:
                break
        else:
            out.append((images, tuple(v - m for v, m in zip(vals, mr))))
    return out


def _element(images, vec) -> AltElement:
    sigma = Permutation(images)
    return AltElement(sigma, sigma.length, sigma.sign, vec)


def altset_unchecked(ctx: RankContext, lam: Sequence, mu: Sequence, workers: int = 1,
                     ceiling: int = DEFAULT_CEILING, audit: bool = False) -> AltSet:
    """Brute-force filter of S_n without dominance checks on lam and mu."""
    if ctx.n > ceiling:
        raise ResourceLimitError(
            f"brute-force alternation set needs n = {ctx.n} > ceiling {ceiling} ({ctx.n}! permutations)",
            ceiling)
    lam, mu = ctx.check(lam, "lambda"), ctx.check(mu, "mu")
    pair = shifted_pair(ctx, lam, mu)
    if pair is None:
        return AltSet(ctx, lam, mu, ())
    lr, mr = pair
    chunks = map_ranges(scan_chunk, ctx.n, workers, lr, mr)
    elements = tuple(_element(images, vec) for chunk in chunks for images, vec in chunk)
    if audit:
        _audit(ctx, lr, mr, elements)
    return AltSet(ctx, lam, mu, elements)


def _audit(ctx, lr, mr, elements):
    """Re-derive membership with the full partition function on every permutation."""
    cache = PartitionCache(ctx.n)
    kept = {e.sigma.images for e in elements}
    for images in iter_range(ctx.n, 0, math.factorial(ctx.n)):
        vec = _translate_from_images(images, lr, mr)
        positive = kostant(ctx, vec, cache) > 0
        if positive != (images in kept):
            raise AssertionError(f"positivity filter disagrees with the partition function at {images}")
        if positive != is_positive(ctx, vec):
            raise AssertionError(f"partial-sum test disagrees with the partition function at {images}")


def altset_bruteforce(ctx: RankContext, lam: Sequence, mu: Sequence, workers=1,
                      ceiling: int = DEFAULT_CEILING, audit: bool = False) -> AltSet:
    """Every sigma in S_n with a positive partition value on sigma(lam+rho) - (mu+rho).

    ``workers`` splits the scan over processes (None reads the environment,
    0 means one per CPU); the result does not depend on it.
    """
    lam = check_dominant(ctx, lam, "lambda")
    mu = check_dominant(ctx, mu, "mu")
    return altset_unchecked(ctx, lam, mu, resolve_workers(workers), ceiling, audit)


def independent_index_sets(r: int) -> List[Tuple[int, ...]]:
    """Pairwise non-consecutive subsets of {2, ..., r-1}, ordered by (size, bitmask)."""
    span = max(0, r - 2)
    masks = [m for m in range(1 << span) if not m & (m >> 1)]
    masks.sort(key=lambda m: (bin(m).count("1"), m))
    return [tuple(2 + b for b in range(span) if m >> b & 1) for m in masks]


def altset_closed_zero(ctx: RankContext) -> AltSet:
    """The alternation set of (highest root, 0) as products of commuting simple reflections."""
    lam, mu = ctx.highest_root, ctx.zero()
    elements = []
    for idx in independent_index_sets(ctx.r):
        sigma = product_of_simple_reflections(ctx, idx)
        elements.append(AltElement(sigma, sigma.length, sigma.sign, translate(ctx, sigma, lam, mu)))
    return AltSet(ctx, lam, mu, tuple(elements))


def altset_closed_nonzero(ctx: RankContext, mu: Sequence) -> AltSet:
    """{1} when mu is the highest root, otherwise empty; mu must be dominant and nonzero."""
    mu = check_dominant(ctx, mu, "mu")
    if not any(mu):
        raise InvalidInputError("mu = 0 is handled by altset_closed_zero")
    lam = ctx.highest_root
    if mu != lam:
        return AltSet(ctx, lam, mu, ())
    one = Permutation.identity(ctx.n)
    return AltSet(ctx, lam, mu, (AltElement(one, 0, 1, translate(ctx, one, lam, mu)),))


def max_length(ctx: RankContext) -> int:
    return formulas.max_length(ctx.r)


# Membership predicates for the highest root and zero weight, each reached by a
# different route.

def member_by_partition(ctx: RankContext, sigma: Permutation, cache=None) -> bool:
    vec = translate(ctx, sigma, ctx.highest_root, ctx.zero())
    return kostant(ctx, vec, cache) > 0


def member_by_displacement(sigma: Permutation) -> bool:
    n = sigma.n
    return sigma(1) == 1 and sigma(n) == n and sigma.displacement() <= 1


def member_by_reflections(ctx: RankContext, sigma: Permutation) -> bool:
    return sigma.images in _reflection_products(ctx.r)


_REFLECTION_PRODUCTS: dict = {}


def _reflection_products(r: int) -> frozenset:
    hit = _REFLECTION_PRODUCTS.get(r)
    if hit is None:
        from .rootsys import make_context

        ctx = make_context(r)
        hit = frozenset(product_of_simple_reflections(ctx, idx).images
                        for idx in independent_index_sets(r))
        _REFLECTION_PRODUCTS[r] = hit
    return hit
