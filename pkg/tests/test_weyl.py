import itertools
import math
import random

import pytest
from hypothesis import given, strategies as st

from kostant.errors import InvalidIndexError, InvalidInputError
from kostant.rootsys import make_context
from kostant.weyl import (
    Permutation,
    act,
    compose,
    enumerate_permutations,
    is_commuting_neighbor_product,
    iter_range,
    product_of_simple_reflections,
    rank,
    split_range,
    unrank,
)


def perms(n):
    return st.permutations(list(range(1, n + 1))).map(lambda p: Permutation(tuple(p)))


def test_identity_action():
    assert act(Permutation.identity(5), (5, 3, 2, 1, -1)) == (5, 3, 2, 1, -1)


def test_s2_action_hand_computed():
    s2 = Permutation((1, 3, 2, 4, 5))
    assert act(s2, (5, 3, 2, 1, -1)) == (5, 2, 3, 1, -1)


@pytest.mark.parametrize("n", [3, 4, 6])
def test_simple_reflection_sends_basis_vectors(n):
    ctx = make_context(n - 1)
    for i in range(1, n):
        s = product_of_simple_reflections(ctx, [i])
        for k in range(1, n + 1):
            assert act(s, ctx.unit(k)) == ctx.unit(s(k))


def test_general_action_on_basis():
    sigma = Permutation((3, 1, 4, 2))
    ctx = make_context(3)
    for k in range(1, 5):
        assert act(sigma, ctx.unit(k)) == ctx.unit(sigma(k))


@given(st.integers(1, 7).flatmap(lambda n: st.tuples(perms(n), perms(n), st.lists(st.integers(-9, 9), min_size=n, max_size=n))))
def test_group_action(args):
    sigma, tau, xi = args
    xi = tuple(xi)
    assert act(sigma, act(sigma.inverse, xi)) == xi
    assert act(compose(sigma, tau), xi) == act(sigma, act(tau, xi))
    assert compose(sigma, sigma.inverse).is_identity()
    assert (sigma * tau).sign == sigma.sign * tau.sign


def test_lengths():
    assert Permutation.identity(4).length == 0
    assert Permutation((1, 3, 2, 4, 5)).length == 1
    assert Permutation((1, 3, 2, 5, 4, 6)).length == 2


def test_act_dimension_mismatch():
    with pytest.raises(InvalidInputError):
        act(Permutation.identity(3), (1, 2))


def test_not_a_permutation():
    with pytest.raises(InvalidInputError):
        Permutation((1, 1, 2))


@pytest.mark.parametrize("n,total,even", [(2, 2, 1), (4, 24, 12)])
def test_enumeration_counts(n, total, even):
    ps = list(enumerate_permutations(n))
    assert len(ps) == total == len(set(ps))
    assert sum(p.sign == 1 for p in ps) == even


def test_enumeration_is_lexicographic():
    ps = [p.images for p in enumerate_permutations(5)]
    assert ps == sorted(ps)


def test_theorem_predicate_count_n5():
    count = sum(1 for p in enumerate_permutations(5) if p(1) == 1 and p(5) == 5 and p.displacement() <= 1)
    assert count == 3


def test_product_of_simple_reflections():
    assert product_of_simple_reflections(make_context(4), []).is_identity()
    assert product_of_simple_reflections(make_context(4), [2]).images == (1, 3, 2, 4, 5)
    p = product_of_simple_reflections(make_context(5), [2, 4])
    assert p.length == 2
    assert compose(p, p).is_identity()
    assert [i for i in range(1, 7) if p(i) == i] == [1, 6]
    with pytest.raises(InvalidIndexError):
        product_of_simple_reflections(make_context(2), [3])


@pytest.mark.parametrize("n", range(1, 8))
def test_commuting_neighbor_equivalence(n):
    for p in enumerate_permutations(n):
        bounded = p.displacement() <= 1
        involution = compose(p, p).is_identity()
        assert bounded == is_commuting_neighbor_product(p)
        assert bounded == (involution and bounded)
        if bounded:
            assert involution


def _fib(k):
    a, b = 0, 1
    for _ in range(k):
        a, b = b, a + b
    return a


@pytest.mark.parametrize("m", range(1, 11))
def test_bounded_displacement_count_is_fibonacci(m):
    count = 0
    for p in itertools.permutations(range(m)):
        for i, x in enumerate(p):
            if x - i > 1 or i - x > 1:
                break
        else:
            count += 1
    assert count == _fib(m + 1)


@pytest.mark.parametrize("n", range(1, 7))
def test_unrank_round_trip(n):
    for k, p in enumerate(itertools.permutations(range(1, n + 1))):
        assert unrank(n, k) == p
        assert rank(p) == k


@pytest.mark.parametrize("n,parts", [(5, 1), (5, 3), (6, 7), (4, 100)])
def test_ranges_partition_the_group(n, parts):
    chunks = split_range(math.factorial(n), parts)
    seen = [p for lo, hi in chunks for p in iter_range(n, lo, hi)]
    assert seen == list(itertools.permutations(range(1, n + 1)))


def test_random_sign_homomorphism():
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randint(1, 9)
        a = Permutation(tuple(rng.sample(range(1, n + 1), n)))
        b = Permutation(tuple(rng.sample(range(1, n + 1), n)))
        assert compose(a, b).sign == a.sign * b.sign
