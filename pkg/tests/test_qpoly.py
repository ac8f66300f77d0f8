from math import comb

import pytest
from hypothesis import given, strategies as st

from kostant import formulas
from kostant.qpoly import QPoly, binom_expand, eval_at_one, render, scalar_mul

big = st.integers(-(2 ** 128), 2 ** 128)
polys = st.lists(big, max_size=8).map(QPoly)


def test_square():
    assert QPoly([1, 1]) * QPoly([1, 1]) == QPoly([1, 2, 1])


def test_q_times_binomial():
    assert QPoly([0, 1]) * binom_expand(2) == QPoly([0, 1, 2, 1])


def test_self_difference_is_zero():
    p = QPoly([3, 0, -7])
    assert p - p == QPoly() and not (p - p)
    assert (p - p).degree is None


def test_canonical_form_drops_trailing_zeros():
    assert QPoly([1, 2, 0, 0]).coeffs == (1, 2)
    assert QPoly([0, 0]).coeffs == ()


def test_binom_expand():
    assert binom_expand(0) == QPoly([1])
    assert binom_expand(3) == QPoly([1, 3, 3, 1])
    assert binom_expand(61).eval_at_one() == 2 ** 61


def test_eval_at_one():
    assert eval_at_one(QPoly([0, 1, 1, 1])) == 3
    assert eval_at_one(QPoly()) == 0
    assert (QPoly([0, 1]) * binom_expand(4)).eval_at_one() == 16


def test_render():
    assert render(QPoly([0, 1, 1, 1])) == "q + q^2 + q^3"
    assert render(QPoly([2, -1, 0, 3])) == "2 - q + 3*q^3"
    assert render(QPoly([-1])) == "-1"
    assert render(QPoly()) == "0"


def test_rejects_non_integer_coefficients():
    with pytest.raises(TypeError):
        QPoly([1.5])


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert (a + b).eval_at_one() == a.eval_at_one() + b.eval_at_one()
    assert (a * b).eval_at_one() == a.eval_at_one() * b.eval_at_one()


@given(polys, big)
def test_scalar_and_evaluation(a, k):
    assert scalar_mul(a, k) == a * QPoly([k])
    assert a(1) == a.eval_at_one()
    assert (a ** 2)(3) == a(3) ** 2


@pytest.mark.parametrize("r", list(range(1, 201)))
def test_alternating_identity(r):
    assert formulas.alternating_sum(r) == QPoly([0] + [1] * r)


@pytest.mark.parametrize("r", range(1, 61))
def test_fibonacci_t_analog(r):
    poly = formulas.fibonacci_t(r)
    assert poly(1) == formulas.fibonacci(r)
    assert poly.coeffs == tuple(comb(r - 1 - k, k) for k in range((r - 1) // 2 + 1))


def test_fibonacci_values():
    assert [formulas.fibonacci(k) for k in range(1, 10)] == [1, 1, 2, 3, 5, 8, 13, 21, 34]


def test_exact_division():
    assert formulas.geometric_times_q(4) == QPoly([0, 1, 1, 1, 1])
    with pytest.raises(ValueError):
        formulas.exact_div(QPoly([1, 0, 1]), QPoly([1, 1]))
