"""Koszul signs, permutation parity, canonical skew keys."""

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from homnary.errors import MalformedInputError
from homnary.graded import (
    GradedSpace,
    canonical_skew_key,
    koszul_sign,
    perm_sign,
    tuple_parity,
)


def compose(sigma, tau):
    # apply tau first, then sigma: new[k] = old[sigma[tau[k]]]... with our
    # convention new[k] = old[perm[k]], composing reorders as below
    return tuple(sigma[tau[k]] for k in range(len(sigma)))


def test_identity_permutation_is_plus_one():
    assert koszul_sign((0, 1, 2), (1, 1, 0)) == 1
    assert perm_sign((0, 1, 2)) == 1


def test_adjacent_swap_of_two_odds():
    assert koszul_sign((1, 0), (1, 1)) == -1


def test_three_cycle_one_odd_past_two_evens():
    # odd element at position 0 moved to the end: crossings odd*even twice
    assert koszul_sign((1, 2, 0), (1, 0, 0)) == 1


def test_non_bijection_rejected():
    with pytest.raises(MalformedInputError):
        koszul_sign((0, 0, 1), (0, 0, 0))


def test_koszul_composition_consistency_brute_force():
    # factor of a composite reordering equals the product of the factors,
    # with the intermediate parities permuted accordingly
    for m in (2, 3, 4):
        for parities in itertools.product((0, 1), repeat=m):
            for sigma in itertools.permutations(range(m)):
                for tau in itertools.permutations(range(m)):
                    lhs = koszul_sign(compose(sigma, tau), parities) * perm_sign(compose(sigma, tau))
                    mid = tuple(parities[sigma[k]] for k in range(m))
                    rhs = (koszul_sign(sigma, parities) * perm_sign(sigma)
                           * koszul_sign(tau, mid) * perm_sign(tau))
                    assert lhs == rhs, (sigma, tau, parities)


def test_tuple_parity():
    space = GradedSpace((0, 1))
    assert tuple_parity((0, 1), space) == 1
    assert tuple_parity((), space) == 0
    assert tuple_parity((1, 1), space) == 0
    with pytest.raises(MalformedInputError):
        tuple_parity((2,), space)


def test_canonical_key_swaps_two_evens():
    space = GradedSpace((0, 0))
    key = canonical_skew_key((1, 0), space, 2)
    assert key.indices == (0, 1) and key.sign == -1 and not key.zero


def test_canonical_key_repeated_even_forces_zero():
    space = GradedSpace((0, 0))
    assert canonical_skew_key((0, 0), space, 2).zero


def test_canonical_key_repeated_odd_is_free():
    # swap factor -(-1)^{1*1} = +1 constrains nothing
    space = GradedSpace((0, 1))
    key = canonical_skew_key((1, 1), space, 2)
    assert key.indices == (1, 1) and key.sign == 1 and not key.zero


def test_prefix_only_sorting():
    space = GradedSpace((0, 0, 0))
    key = canonical_skew_key((2, 0, 1), space, 2)
    assert key.indices == (0, 2, 1)
    assert key.sign == -1


@settings(max_examples=200, derandomize=True)
@given(st.data())
def test_canonical_key_idempotent(data):
    dim = data.draw(st.integers(1, 4))
    parities = tuple(data.draw(st.lists(st.integers(0, 1), min_size=dim, max_size=dim)))
    space = GradedSpace(parities)
    k = data.draw(st.integers(1, 4))
    prefix = data.draw(st.integers(0, k))
    idx = tuple(data.draw(st.lists(st.integers(0, dim - 1), min_size=k, max_size=k)))
    key = canonical_skew_key(idx, space, prefix)
    again = canonical_skew_key(key.indices, space, prefix)
    assert again.indices == key.indices
    assert again.sign == 1
