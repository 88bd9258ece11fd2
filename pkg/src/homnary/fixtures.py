"""Ready-made desk-scale instances used by the test suite and the docs.

``omitted_argument_nlie(n)`` is the (n+1)-dimensional n-ary superalgebra with
n even generators, one odd generator, and the bracket that drops one even
generator and fixes the odd one; ``signed_omitted_nlie(n)`` is its twisted
variant with alternating signs and a twist map annihilating the odd
generator.  ``tiny_hom_pre_lie`` is the two-dimensional binary instance with
a single odd square; ``phi_line(lam)`` is the rank-one even form on it.
"""

from __future__ import annotations

from .algebras import HomPreLieSuper, NHomLieSuper, NHomPreLieSuper
from .graded import GradedSpace
from .induction import PhiForm, induce_nary_product
from .scalars import ONE, Q
from .tensors import EvenLinearMap, MultiLinearProduct


def omitted_argument_nlie(n: int = 3) -> NHomLieSuper:
    """dim n+1, parities (0,..,0,1); dropping the i-th even generator from
    (e_1, .., e_n, e_{n+1}) maps to e_{n+1}; twist is the identity."""
    space = GradedSpace((0,) * n + (1,))
    entries = {}
    for omit in range(n):
        key = tuple(j for j in range(n) if j != omit) + (n,)
        entries[key] = {n: ONE}
    bracket = MultiLinearProduct(space, n, n, entries)
    return NHomLieSuper(space, bracket, EvenLinearMap.identity(space))


def signed_omitted_nlie(n: int = 3) -> NHomLieSuper:
    """Same bracket support with the sign (-1)^{i+1} for the dropped
    generator, and the twist fixing the even part and killing the odd one."""
    space = GradedSpace((0,) * n + (1,))
    entries = {}
    for omit in range(n):
        key = tuple(j for j in range(n) if j != omit) + (n,)
        sign = ONE if omit % 2 == 0 else -ONE
        entries[key] = {n: sign}
    bracket = MultiLinearProduct(space, n, n, entries)
    alpha = EvenLinearMap.from_entries(space, space, {(j, j): ONE for j in range(n)})
    return NHomLieSuper(space, bracket, alpha)


def abelian_nlie(n: int, parities=(0, 0, 1)) -> NHomLieSuper:
    space = GradedSpace(tuple(parities))
    bracket = MultiLinearProduct(space, n, n, {})
    return NHomLieSuper(space, bracket, EvenLinearMap.identity(space))


def tiny_hom_pre_lie(identity_twist: bool = False) -> HomPreLieSuper:
    """Basis (e_1 even, e_2 odd); the only product is e_2 o e_2 = e_1.

    With the default twist (e_1 -> 0, e_2 -> e_2) this is the standard
    non-multiplicative instance; ``identity_twist=True`` swaps in the
    identity map.
    """
    space = GradedSpace((0, 1))
    circ = MultiLinearProduct(space, 2, 0, {(1, 1): {0: ONE}})
    if identity_twist:
        alpha = EvenLinearMap.identity(space)
    else:
        alpha = EvenLinearMap.from_entries(space, space, {(1, 1): ONE})
    return HomPreLieSuper(space, circ, alpha)


def phi_line(lam=1, identity_twist: bool = False) -> PhiForm:
    """The even 2-form with the single entry on the odd pair."""
    alg = tiny_hom_pre_lie(identity_twist)
    return PhiForm(alg.space, 2, {(1, 1): Q(0) + lam})


def induced_four_ary(lam=1, identity_twist: bool = False) -> NHomPreLieSuper:
    """The 4-ary product induced from the tiny binary instance; the single
    nonzero entry is {e_2, e_2, e_2, e_2} = 3 lam e_1."""
    alg = tiny_hom_pre_lie(identity_twist)
    return induce_nary_product(phi_line(lam, identity_twist), alg, 4)


def zero_pre_lie(n: int, parities=(0, 1)) -> NHomPreLieSuper:
    space = GradedSpace(tuple(parities))
    brace = MultiLinearProduct(space, n, n - 1, {})
    return NHomPreLieSuper(space, brace, EvenLinearMap.identity(space))


def idempotent_pre_lie(c=2) -> HomPreLieSuper:
    """Basis (u even, v odd) with u o u = u; the twist scales v by c.

    Multiplicative for any c, and associative, so the binary axioms hold;
    handy as a nontrivial intertwining-twist instance.
    """
    space = GradedSpace((0, 1))
    circ = MultiLinearProduct(space, 2, 0, {(0, 0): {0: ONE}})
    alpha = EvenLinearMap.from_entries(space, space, {(0, 0): ONE, (1, 1): Q(0) + c})
    return HomPreLieSuper(space, circ, alpha)


def clifford_line() -> NHomPreLieSuper:
    """Rank-one Clifford algebra: unit u (even), generator v (odd), v o v = u.

    Associative, so a pre-Lie superalgebra with the identity twist.  The odd
    square makes right multiplications invertible, which exercises every
    graded crossing sign; sparser instances mask many of them.
    """
    space = GradedSpace((0, 1))
    table = {(0, 0): {0: ONE}, (0, 1): {1: ONE}, (1, 0): {1: ONE}, (1, 1): {0: ONE}}
    return NHomPreLieSuper(space, MultiLinearProduct(space, 2, 1, table),
                           EvenLinearMap.identity(space))


def upper_triangular_assoc() -> NHomPreLieSuper:
    """2x2 upper triangular matrices (all even): a=E11, b=E12, c=E22.

    Associative and non-commutative; catches sign slips that commutative
    tables cannot see even in the ungraded case.
    """
    space = GradedSpace((0, 0, 0))
    table = {(0, 0): {0: ONE}, (0, 1): {1: ONE}, (1, 2): {1: ONE}, (2, 2): {2: ONE}}
    return NHomPreLieSuper(space, MultiLinearProduct(space, 2, 1, table),
                           EvenLinearMap.identity(space))


def triangular_super() -> NHomPreLieSuper:
    """Upper triangular endomorphisms of a (1|1)-space: a=E11, d=E22 even,
    b=E12 odd.  Non-commutative with an odd generator; the combination of
    the two pins conventions that either feature alone leaves undetermined."""
    space = GradedSpace((0, 0, 1))
    table = {(0, 0): {0: ONE}, (1, 1): {1: ONE}, (0, 2): {2: ONE}, (2, 1): {2: ONE}}
    return NHomPreLieSuper(space, MultiLinearProduct(space, 2, 1, table),
                           EvenLinearMap.identity(space))
