"""Closed forms for the highest root of sl_{r+1}.

Nothing here enumerates permutations or partitions; these are the formulas the
enumeration code in the other modules is checked against.
"""

from __future__ import annotations

from math import comb

from .qpoly import QPoly, binom_expand


def fibonacci(k: int) -> int:
    """F_k with F_1 = F_2 = 1 (and F_0 = 0)."""
    if k < 0:
        raise ValueError("negative Fibonacci index")
    a, b = 0, 1
    for _ in range(k):
        a, b = b, a + b
    return a


def level_count(r: int, k: int) -> int:
    """Number of length-k elements in the alternation set of (highest root, 0)."""
    if k < 0 or r - 1 - k < k:
        return 0
    return comb(r - 1 - k, k)


def max_length(r: int) -> int:
    return (r - 1) // 2


def fibonacci_t(r: int) -> QPoly:
    """t-analog sum_k C(r-1-k, k) t^k; evaluates to F_r at t = 1."""
    return QPoly(level_count(r, k) for k in range(max_length(r) + 1))


def closed_partition_q(r: int, ell: int) -> QPoly:
    """q^(1+ell) (1+q)^(r-1-2ell): the q-partition value on a length-ell translate."""
    return QPoly.monomial(1 + ell) * binom_expand(r - 1 - 2 * ell)


def closed_partition(r: int, ell: int) -> int:
    return 2 ** (r - 1 - 2 * ell)


def alternating_sum(r: int) -> QPoly:
    """sum_k (-1)^k C(r-1-k, k) q^(1+k) (1+q)^(r-1-2k)."""
    total = QPoly()
    for k in range(max_length(r) + 1):
        total = total + closed_partition_q(r, k) * ((-1) ** k * comb(r - 1 - k, k))
    return total


def exponent_poly(r: int) -> QPoly:
    """q + q^2 + ... + q^r."""
    return QPoly([0] + [1] * r)


def geometric_times_q(r: int) -> QPoly:
    """q (1 - q^r) / (1 - q), computed by exact polynomial division."""
    numer = QPoly([0, 1]) * (QPoly([1]) - QPoly.monomial(r))
    return exact_div(numer, QPoly([1, -1]))


def exact_div(numer: QPoly, denom: QPoly) -> QPoly:
    """Long division that insists on a zero remainder and integer quotient."""
    if not denom:
        raise ZeroDivisionError("division by the zero polynomial")
    rem = list(numer.coeffs)
    dlen = len(denom.coeffs)
    lead = denom.coeffs[-1]
    quot = [0] * max(0, len(rem) - dlen + 1)
    for shift in range(len(quot) - 1, -1, -1):
        c, m = divmod(rem[shift + dlen - 1], lead)
        if m:
            raise ValueError("quotient is not an integer polynomial")
        quot[shift] = c
        for k, d in enumerate(denom.coeffs):
            rem[shift + k] -= c * d
    if any(rem):
        raise ValueError("polynomial division leaves a remainder")
    return QPoly(quot)
