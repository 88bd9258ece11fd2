"""Linear maps, canonical product storage, action tensors."""

import itertools

import pytest

from homnary.errors import MalformedInputError, SingularMapError
from homnary.graded import GradedSpace, canonical_skew_key
from homnary.scalars import Q
from homnary.tensors import (
    ActionTensor,
    EvenLinearMap,
    MultiLinearProduct,
    RawProduct,
    all_tuples,
    basis_vec,
    vec_equal,
    vec_scale,
)


def test_even_map_rejects_parity_mixing():
    space = GradedSpace((0, 1))
    with pytest.raises(MalformedInputError):
        EvenLinearMap(space, space, [[Q(0), Q(1)], [Q(0), Q(0)]])


def test_inverse_and_transpose():
    space = GradedSpace((0, 0, 1))
    m = EvenLinearMap.from_entries(space, space,
                                   {(0, 0): Q(2), (0, 1): Q(1), (1, 1): Q(1), (2, 2): Q(3)})
    inv = m.inverse()
    assert m.compose(inv) == EvenLinearMap.identity(space)
    assert inv.compose(m) == EvenLinearMap.identity(space)
    assert m.transpose().transpose() == m
    singular = EvenLinearMap.from_entries(space, space, {(0, 0): Q(1)})
    with pytest.raises(SingularMapError):
        singular.inverse("alpha")


def test_block_diag_and_power():
    a = GradedSpace((0,))
    b = GradedSpace((1,))
    m = EvenLinearMap.block_diag(EvenLinearMap.from_entries(a, a, {(0, 0): Q(2)}),
                                 EvenLinearMap.zero(b, b))
    assert m.space_in.parities == (0, 1)
    assert m.power(3).rows[0][0] == Q(8)


def test_product_requires_canonical_keys():
    space = GradedSpace((0, 0))
    with pytest.raises(MalformedInputError):
        MultiLinearProduct(space, 2, 2, {(1, 0): {1: Q(1)}})


def test_product_rejects_forced_zero_entry():
    space = GradedSpace((0, 0))
    with pytest.raises(MalformedInputError):
        MultiLinearProduct(space, 2, 2, {(0, 0): {0: Q(1)}})


def test_product_rejects_parity_violation():
    # an odd pair must map into the even component
    space = GradedSpace((0, 1))
    with pytest.raises(MalformedInputError):
        MultiLinearProduct(space, 2, 2, {(1, 1): {1: Q(1)}})


def test_from_raw_consistent_duplicates():
    space = GradedSpace((0, 0, 1))
    raw = {(0, 1): {2: Q(0)}, (1, 0): {2: Q(0)}}
    p = MultiLinearProduct.from_raw(space, 2, 2, raw)
    assert p.is_zero()
    raw = {(0, 1): {1: Q(1)}, (1, 0): {1: Q(1)}}  # skew demands opposite signs
    with pytest.raises(MalformedInputError):
        MultiLinearProduct.from_raw(space, 2, 2, raw)
    raw = {(0, 1): {1: Q(1)}, (1, 0): {1: Q(-1)}}
    p = MultiLinearProduct.from_raw(space, 2, 2, raw)
    assert vec_equal(p.evaluate_basis((1, 0)), {1: Q(-1)})


def test_permuted_evaluation_matches_sign_exhaustively():
    # stored product evaluated at a permuted tuple equals the Koszul-adjusted
    # canonical evaluation, over every tuple and skew-prefix permutation
    for dim, n in ((3, 3), (4, 3), (3, 4), (4, 4)):
        parities = tuple(i % 2 for i in range(dim))
        space = GradedSpace(parities)

        def entry(idx):
            # arbitrary but parity-respecting: characteristic-ish function
            p = sum(parities[i] for i in idx) % 2
            out = sum(idx) % dim
            while parities[out] != p:
                out = (out + 1) % dim
            return {out: Q(1 + sum(idx))}

        product = MultiLinearProduct.build(space, n, n, entry, allow_large=True)
        for t in all_tuples(dim, n):
            base = product.evaluate_basis(t)
            for perm in itertools.permutations(range(n)):
                pt = tuple(t[p] for p in perm)
                key_t = canonical_skew_key(t, space, n)
                key_pt = canonical_skew_key(pt, space, n)
                got = product.evaluate_basis(pt)
                if key_pt.zero or key_t.zero:
                    continue
                expect = vec_scale(product.evaluate_basis(key_t.indices),
                                   Q(key_pt.sign))
                assert vec_equal(got, expect)


def test_raw_product_lookup_is_uncanonicalized():
    space = GradedSpace((0, 0))
    raw = RawProduct(space, 2, 2, {(0, 1): {1: Q(1)}})
    assert raw.evaluate_basis((0, 1)) == {1: Q(1)}
    assert raw.evaluate_basis((1, 0)) == {}


def test_action_tensor_evenness_and_graded_apply():
    alg = GradedSpace((0, 1))
    v = GradedSpace((0, 1))
    with pytest.raises(MalformedInputError):
        ActionTensor(alg, v, 1, 0, {(1,): {0: {0: Q(1)}}})  # odd slot, even->even
    t = ActionTensor(alg, v, 1, 0, {(1,): {0: {1: Q(2)}, 1: {0: Q(3)}}})
    assert t.apply([basis_vec(1)], basis_vec(1)) == {0: Q(3)}
    # odd module argument crossing an odd slot flips
    assert t.apply_graded([basis_vec(1)], 1, basis_vec(1), 1) == {0: Q(-3)}
    assert t.apply_graded([basis_vec(1)], 1, basis_vec(0), 0) == {1: Q(2)}
