"""Polynomials in one formal variable with exact integer coefficients."""

from __future__ import annotations

from math import comb
from numbers import Integral
from typing import Iterable, Tuple


class QPoly:
    """Dense integer polynomial c0 + c1*q + ... ; immutable and hashable.

    Trailing zero coefficients are never stored, so the zero polynomial has an
    empty coefficient tuple and degree ``None``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        for k, c in enumerate(cs):
            if type(c) is not int:
                if isinstance(c, bool) or not isinstance(c, Integral):
                    raise TypeError(f"QPoly coefficients must be integers, got {c!r}")
                cs[k] = int(c)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("QPoly is immutable")

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "QPoly":
        if exponent < 0:
            raise ValueError("negative exponent")
        return cls([0] * exponent + [coeff])

    @classmethod
    def from_dict(cls, terms: dict) -> "QPoly":
        if not terms:
            return cls()
        dense = [0] * (max(terms) + 1)
        for e, c in terms.items():
            dense[e] += c
        return cls(dense)

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else None

    def __getitem__(self, exponent: int) -> int:
        if 0 <= exponent < len(self.coeffs):
            return self.coeffs[exponent]
        return 0

    def terms(self) -> Tuple[Tuple[int, int], ...]:
        """Nonzero (exponent, coefficient) pairs in increasing exponent order."""
        return tuple((e, c) for e, c in enumerate(self.coeffs) if c)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, QPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, Integral):
            return self.coeffs == QPoly([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    @staticmethod
    def _coerce(other):
        if isinstance(other, QPoly):
            return other
        if isinstance(other, Integral) and not isinstance(other, bool):
            return QPoly([other])
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return QPoly([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self):
        return QPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if isinstance(other, Integral) and not isinstance(other, bool):
            return QPoly([int(other) * c for c in self.coeffs])
        if not isinstance(other, QPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return QPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result, base = QPoly([1]), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_at_one(self) -> int:
        return sum(self.coeffs)

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def __repr__(self):
        return f"QPoly({list(self.coeffs)!r})"

    def __str__(self):
        return render(self)


def render(p: QPoly, var: str = "q") -> str:
    """Render as ``c0 + c1*q + c2*q^2``, dropping zero terms and unit coefficients."""
    parts = []
    for e, c in p.terms():
        if e == 0:
            body = str(abs(c))
        else:
            power = var if e == 1 else f"{var}^{e}"
            body = power if abs(c) == 1 else f"{abs(c)}*{power}"
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts) if parts else "0"


def add(p, q):
    return QPoly._coerce(p) + q


def sub(p, q):
    return QPoly._coerce(p) - q


def mul(p, q):
    return QPoly._coerce(p) * q


def scalar_mul(p: QPoly, c: int) -> QPoly:
    return p * c


def eval_at_one(p: QPoly) -> int:
    return p.eval_at_one()


def binom_expand(power: int) -> QPoly:
    """(1 + q)^power, built from binomial coefficients."""
    if power < 0:
        raise ValueError("negative power")
    return QPoly(comb(power, i) for i in range(power + 1))


ONE = QPoly([1])
Q = QPoly([0, 1])
ZERO = QPoly()
