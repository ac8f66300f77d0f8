"""Kostant's weight multiplicity formula and Lusztig's q-analog.

Three backends share one result type:

* ``full_sum`` evaluates the partition function on the translate of every
  permutation in S_n;
* ``positivity_pruned`` first drops every permutation whose translate fails
  the partial-sum test and evaluates the partition function on the rest;
* ``closed_form`` only covers the highest root and uses the known answers
  (r, 1 or 0, and q + ... + q^r) without any sum.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Sequence, Tuple, Union

from . import formulas
from .altset import DEFAULT_CEILING, altset_unchecked, check_dominant, shifted_pair
from .errors import InvalidInputError, InvalidWeightError, ResourceLimitError
from .parallel import map_ranges, resolve_workers
from .partition import make_counter, make_q_counter
from .qpoly import QPoly
from .rootsys import EpsVector, RankContext, format_vector, in_root_lattice, is_integral_weight
from .weyl import Permutation, act, inversions, iter_range


class Backend(str, enum.Enum):
    FULL_SUM = "full_sum"
    POSITIVITY_PRUNED = "positivity_pruned"
    CLOSED_FORM = "closed_form"


@dataclass(frozen=True)
class MultiplicityResult:
    value: Union[int, QPoly]
    terms_evaluated: int
    backend: Backend


def _backend(b) -> Backend:
    try:
        return Backend(b)
    except ValueError:
        raise InvalidInputError(f"unknown backend {b!r}; choose from {[x.value for x in Backend]}") from None


def _check_integral(ctx: RankContext, mu: Sequence, what="mu") -> EpsVector:
    vec = ctx.check(mu, what)
    if not is_integral_weight(vec):
        raise InvalidWeightError(f"{what} {format_vector(vec)} is not an integral weight")
    return vec


def _zero(q: bool):
    return QPoly() if q else 0


def full_sum_chunk(n: int, start: int, stop: int, lr, mr, q: bool):
    """Signed partition-function sum over permutations with rank in [start, stop)."""
    memo: dict = {}
    walk = make_q_counter(n, memo) if q else make_counter(n, memo)
    total = [] if q else 0
    evaluated = 0
    for images in iter_range(n, start, stop):
        vals = [0] * n
        for k, t in enumerate(images):
            vals[t - 1] = lr[k]
        value = walk(0, tuple(v - m for v, m in zip(vals, mr)))
        evaluated += 1
        if not value:
            continue
        sgn = -1 if inversions(images) % 2 else 1
        if q:
            if len(total) < len(value):
                total.extend([0] * (len(value) - len(total)))
            for e, c in enumerate(value):
                total[e] += sgn * c
        else:
            total += sgn * value
    return (tuple(total) if q else total), evaluated


def _full_sum(ctx, lr, mr, q, workers, ceiling):
    if ctx.n > ceiling:
        raise ResourceLimitError(
            f"full Weyl sum needs n = {ctx.n} > ceiling {ceiling} ({math.factorial(ctx.n)} terms)", ceiling)
    parts = map_ranges(full_sum_chunk, ctx.n, workers, lr, mr, q)
    evaluated = sum(e for _, e in parts)
    if q:
        value = QPoly()
        for coeffs, _ in parts:
            value = value + QPoly(coeffs)
        return value, evaluated
    return sum(v for v, _ in parts), evaluated


def _pruned_sum(ctx, lam, mu, q, workers, ceiling):
    alt = altset_unchecked(ctx, lam, mu, workers, ceiling)
    memo: dict = {}
    walk = make_q_counter(ctx.n, memo) if q else make_counter(ctx.n, memo)
    value = _zero(q)
    for e in alt:
        term = walk(0, e.translate)
        value = value + (QPoly(term) * e.sign if q else e.sign * term)
    return value, len(alt)


def _closed(ctx, lam, mu, q):
    if lam != ctx.highest_root:
        raise InvalidInputError("the closed_form backend only covers lambda = highest root")
    if not q:
        return adjoint_multiplicity(ctx, mu), 0
    if not any(mu):
        return formulas.exponent_poly(ctx.r), 0
    if mu != tuple(sorted(mu, reverse=True)):
        raise InvalidInputError("closed_form q-multiplicities require a dominant mu")
    return (QPoly([1]) if mu == ctx.highest_root else QPoly()), 0


def _evaluate(ctx, lam, mu, backend, q, workers, ceiling):
    backend = _backend(backend)
    lam = check_dominant(ctx, lam, "lambda")
    mu = _check_integral(ctx, mu)
    if backend is Backend.CLOSED_FORM:
        value, terms = _closed(ctx, lam, mu, q)
        return MultiplicityResult(value, terms, backend)
    workers = resolve_workers(workers)
    pair = shifted_pair(ctx, lam, mu)
    if pair is None:
        # lam - mu outside the root lattice: every term vanishes
        return MultiplicityResult(_zero(q), 0, backend)
    if backend is Backend.FULL_SUM:
        value, terms = _full_sum(ctx, *pair, q, workers, ceiling)
    else:
        value, terms = _pruned_sum(ctx, lam, mu, q, workers, ceiling)
    return MultiplicityResult(value, terms, backend)


def mult(ctx: RankContext, lam: Sequence, mu: Sequence, backend="full_sum", workers=1,
         ceiling: int = DEFAULT_CEILING) -> MultiplicityResult:
    """Multiplicity of the weight mu in the irreducible module of highest weight lam."""
    return _evaluate(ctx, lam, mu, backend, False, workers, ceiling)


def mult_q(ctx: RankContext, lam: Sequence, mu: Sequence, backend="full_sum", workers=1,
           ceiling: int = DEFAULT_CEILING) -> MultiplicityResult:
    """Lusztig's q-analog; evaluating the polynomial at q = 1 gives :func:`mult`."""
    return _evaluate(ctx, lam, mu, backend, True, workers, ceiling)


def dominant_conjugate(ctx: RankContext, mu: Sequence) -> Tuple[EpsVector, Permutation]:
    """Sort mu's coordinates into weakly decreasing order.

    Returns ``(dominant, sigma)`` with ``act(sigma, mu) == dominant``; equal
    coordinates keep their original relative order.
    """
    mu = ctx.check(mu, "mu")
    order = sorted(range(ctx.n), key=lambda k: -mu[k])  # stable
    # coordinate i of the result comes from position order[i], i.e. sigma^{-1}(i+1) = order[i]+1
    inv = Permutation(tuple(k + 1 for k in order))
    sigma = inv.inverse
    return act(sigma, mu), sigma


def adjoint_multiplicity(ctx: RankContext, mu: Sequence) -> int:
    """Multiplicity of mu in the adjoint representation: r at 0, 1 on roots, else 0."""
    mu = _check_integral(ctx, mu)
    if not in_root_lattice(mu):
        return 0
    dominant, _ = dominant_conjugate(ctx, mu)
    if not any(dominant):
        return ctx.r
    return 1 if dominant == ctx.highest_root else 0
