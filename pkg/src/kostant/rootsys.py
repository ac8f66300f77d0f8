"""Type A root system data in epsilon coordinates.

A weight of sl_n is stored as a plain tuple of n exact numbers, the i-th entry
being its pairing with eps_i.  Entries are ``int`` whenever integral and
``fractions.Fraction`` otherwise (fundamental weights not in the root lattice
have fractional coordinates once normalized to coordinate sum zero).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Integral, Rational
from typing import Iterable, Sequence, Tuple, Union

from .errors import InvalidIndexError, InvalidInputError, InvalidRankError, InvalidWeightError

Number = Union[int, Fraction]
EpsVector = Tuple[Number, ...]


def _exact(x) -> Number:
    if isinstance(x, bool):
        raise InvalidInputError(f"boolean is not a coordinate: {x!r}")
    if isinstance(x, Integral):
        return int(x)
    if isinstance(x, Rational):
        x = Fraction(x)
        return int(x) if x.denominator == 1 else x
    if isinstance(x, str):
        try:
            return _exact(Fraction(x))
        except ValueError:
            raise InvalidInputError(f"not an exact number: {x!r}") from None
    raise InvalidInputError(f"coordinates must be exact integers or fractions, got {x!r}")


def eps_vector(coords: Iterable, n: int | None = None) -> EpsVector:
    """Normalize ``coords`` to an EpsVector, optionally checking its length."""
    vec = tuple(_exact(c) for c in coords)
    if n is not None and len(vec) != n:
        raise InvalidInputError(f"expected {n} coordinates, got {len(vec)}")
    return vec


def weight(coords: Iterable, n: int | None = None) -> EpsVector:
    """Like :func:`eps_vector` but also enforces coordinate sum zero."""
    vec = eps_vector(coords, n)
    if sum(vec) != 0:
        raise InvalidWeightError(f"weight {format_vector(vec)} does not have coordinate sum 0")
    return vec


def add(u: Sequence, v: Sequence) -> EpsVector:
    return tuple(_exact(a + b) for a, b in zip(u, v, strict=True))


def sub(u: Sequence, v: Sequence) -> EpsVector:
    return tuple(_exact(a - b) for a, b in zip(u, v, strict=True))


def scale(c, v: Sequence) -> EpsVector:
    return tuple(_exact(c * a) for a in v)


def is_integer_vector(v: Sequence) -> bool:
    return all(isinstance(a, int) for a in v)


def is_integral_weight(v: Sequence) -> bool:
    """True when ``v`` lies in the weight lattice of sl_n (sum 0, integer gaps)."""
    if sum(v) != 0:
        return False
    return all(isinstance(_exact(a - b), int) for a, b in zip(v, v[1:]))


def in_root_lattice(v: Sequence) -> bool:
    return sum(v) == 0 and is_integer_vector(v)


def is_dominant(v: Sequence) -> bool:
    return all(a >= b for a, b in zip(v, v[1:]))


def partial_sums(v: Sequence) -> list:
    out, acc = [], 0
    for a in v[:-1]:
        acc += a
        out.append(_exact(acc))
    return out


def format_vector(v: Sequence) -> str:
    return "(" + ", ".join(str(a) for a in v) + ")"


@dataclass(frozen=True)
class RankContext:
    """Root data of sl_{r+1}; build with :func:`make_context`."""

    r: int
    n: int
    positive_roots: Tuple[EpsVector, ...]
    simple_roots: Tuple[EpsVector, ...]
    rho: EpsVector
    highest_root: EpsVector

    def zero(self) -> EpsVector:
        return (0,) * self.n

    def unit(self, k: int) -> EpsVector:
        """The basis vector eps_k, 1-indexed."""
        if not 1 <= k <= self.n:
            raise InvalidIndexError(f"eps index {k} outside 1..{self.n}")
        return tuple(1 if i == k - 1 else 0 for i in range(self.n))

    def root(self, i: int, j: int) -> EpsVector:
        """eps_i - eps_j for distinct 1-indexed i, j."""
        if i == j:
            raise InvalidIndexError("eps_i - eps_i is not a root")
        return sub(self.unit(i), self.unit(j))

    def roots(self) -> Tuple[EpsVector, ...]:
        """All n(n-1) roots, positive ones first."""
        return self.positive_roots + tuple(scale(-1, b) for b in self.positive_roots)

    def check(self, v: Sequence, what: str = "vector") -> EpsVector:
        vec = eps_vector(v)
        if len(vec) != self.n:
            raise InvalidInputError(f"{what} has {len(vec)} coordinates, rank {self.r} needs {self.n}")
        return vec


@lru_cache(maxsize=None)
def make_context(r: int) -> RankContext:
    if isinstance(r, bool) or not isinstance(r, Integral) or r < 1:
        raise InvalidRankError(f"rank must be a positive integer, got {r!r}")
    r = int(r)
    n = r + 1
    eye = [tuple(1 if i == k else 0 for i in range(n)) for k in range(n)]
    positive = tuple(sub(eye[i], eye[j]) for i in range(n) for j in range(i + 1, n))
    simple = tuple(sub(eye[i], eye[i + 1]) for i in range(r))
    rho = tuple(range(n - 1, -1, -1))
    highest = sub(eye[0], eye[-1])
    return RankContext(r, n, positive, simple, rho, highest)


def fundamental_pairing(ctx: RankContext, i: int, xi: Sequence) -> Number:
    """Pair the i-th fundamental weight with a trace-zero vector: xi_1 + ... + xi_i."""
    if not 1 <= i <= ctx.r:
        raise InvalidIndexError(f"fundamental weight index {i} outside 1..{ctx.r}")
    xi = ctx.check(xi)
    if sum(xi) != 0:
        raise InvalidWeightError(f"{format_vector(xi)} does not have coordinate sum 0")
    return _exact(sum(xi[:i]))


def from_fundamental_coeffs(ctx: RankContext, coeffs: Sequence) -> EpsVector:
    """Express sum(a_i * varpi_i) in sum-zero eps coordinates."""
    coeffs = [_exact(a) for a in coeffs]
    if len(coeffs) != ctx.r:
        raise InvalidInputError(f"expected {ctx.r} fundamental coefficients, got {len(coeffs)}")
    # varpi_i = eps_1 + ... + eps_i - (i/n)(eps_1 + ... + eps_n)
    shift = Fraction(sum(i * a for i, a in enumerate(coeffs, start=1)), ctx.n)
    tails = [sum(coeffs[k:]) for k in range(ctx.r)] + [0]
    return tuple(_exact(t - shift) for t in tails)


def fundamental_coeffs(ctx: RankContext, xi: Sequence) -> Tuple[Number, ...]:
    """Coefficients in the fundamental basis: a_i = (alpha_i^vee, xi) = xi_i - xi_{i+1}."""
    xi = ctx.check(xi)
    return tuple(_exact(xi[k] - xi[k + 1]) for k in range(ctx.r))
