"""Algebra bundles and residual-reporting verifiers for their defining identities.

Three bundle flavours are covered:

* ``NHomLieSuper``: totally super-skew n-ary bracket with an even twist map,
  subject to the twisted fundamental (Hom-Nambu) identity;
* ``NHomPreLieSuper``: n-ary product super-skew in its first n-1 slots,
  subject to two compatibility identities involving the subadjacent bracket;
* ``HomPreLieSuper``: binary product with the twisted left-symmetry identity.

Checkers return a ``ResidualReport``; an empty report means the identity
holds on the whole basis.  Reports list *all* violating tuples with exact
residual vectors, because locating a wrong sign in a hand-computed example is
half the point.

Identity loops run the skew-symmetric argument group over canonical (sorted)
representatives by default; residuals transform by the same sign as the
stored product under permutations of that group, so nothing is lost.  Pass
``full_loops=True`` to force the naive full loop (used by the equivalence
test that guards the restriction).
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Sequence, Tuple

from .errors import MalformedInputError
from .graded import GradedSpace, tuple_parity
from .scalars import ONE
from .tensors import (
    ActionTensor,
    EvenLinearMap,
    MultiLinearProduct,
    Vec,
    all_tuples,
    canonical_tuples,
    vec_add,
    vec_neg,
    vec_scale,
    vec_sub,
)

# ---------------------------------------------------------------------------
# bundles
# ---------------------------------------------------------------------------


def _require_even_endo(alpha: EvenLinearMap, space: GradedSpace, what: str) -> None:
    if alpha.space_in.parities != space.parities or alpha.space_out.parities != space.parities:
        raise MalformedInputError(f"{what} twist map does not match the space")


@dataclass(frozen=True)
class NHomLieSuper:
    """(space, totally skew n-ary bracket, even twist map)."""

    space: GradedSpace
    bracket: MultiLinearProduct
    alpha: EvenLinearMap

    def __post_init__(self):
        if self.bracket.skew_prefix_len != self.bracket.arity:
            raise MalformedInputError("Lie bracket must be stored totally skew")
        if self.bracket.arity < 2:
            raise MalformedInputError("bracket arity must be >= 2")
        _require_even_endo(self.alpha, self.space, "algebra")

    @property
    def n(self) -> int:
        return self.bracket.arity


@dataclass(frozen=True)
class NHomPreLieSuper:
    """(space, n-ary product skew in the first n-1 slots, even twist map)."""

    space: GradedSpace
    brace: MultiLinearProduct
    alpha: EvenLinearMap

    def __post_init__(self):
        if self.brace.skew_prefix_len != self.brace.arity - 1:
            raise MalformedInputError("pre-Lie product must be stored skew on the first n-1 slots")
        if self.brace.arity < 2:
            raise MalformedInputError("product arity must be >= 2")
        _require_even_endo(self.alpha, self.space, "algebra")

    @property
    def n(self) -> int:
        return self.brace.arity


@dataclass(frozen=True)
class HomPreLieSuper:
    """(space, binary product, even twist map): twisted left-symmetric algebra."""

    space: GradedSpace
    circ: MultiLinearProduct
    alpha: EvenLinearMap

    def __post_init__(self):
        if self.circ.arity != 2 or self.circ.skew_prefix_len != 0:
            raise MalformedInputError("binary product must have arity 2 and no skew prefix")
        _require_even_endo(self.alpha, self.space, "algebra")

    @property
    def n(self) -> int:
        return 2

    def as_nary(self) -> NHomPreLieSuper:
        """View as an n-Hom-pre-Lie bundle with n = 2 (skew prefix of length 1
        is vacuous, so the tables coincide)."""
        brace = MultiLinearProduct(self.space, 2, 1, dict(self.circ.entries), allow_large=True)
        return NHomPreLieSuper(self.space, brace, self.alpha)


# ---------------------------------------------------------------------------
# residual reports
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Violation:
    identity_id: str
    where: tuple            # nested tuple of 0-based index tuples / indices
    residual: tuple         # sorted ((basis index, coefficient), ...), nonzero


def _violation(identity_id: str, where, residual: Vec) -> Violation:
    return Violation(identity_id, where, tuple(sorted(residual.items())))


@dataclass
class ResidualReport:
    identity_ids: Tuple[str, ...]
    violations: List[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, identity_id: str, where, residual: Vec) -> None:
        if residual:
            self.violations.append(_violation(identity_id, tuple(where), residual))

    def sort(self) -> "ResidualReport":
        self.violations.sort(key=lambda v: (v.identity_id, v.where))
        return self

    def for_identity(self, identity_id: str) -> List[Violation]:
        return [v for v in self.violations if v.identity_id == identity_id]

    def identity_ok(self, identity_id: str) -> bool:
        return not self.for_identity(identity_id)

    def merged_with(self, other: "ResidualReport") -> "ResidualReport":
        merged = ResidualReport(self.identity_ids + other.identity_ids,
                                self.violations + other.violations)
        return merged.sort()

    def first(self) -> Optional[Violation]:
        return self.violations[0] if self.violations else None

    def __repr__(self):
        status = "ok" if self.ok else f"{len(self.violations)} violations"
        return f"ResidualReport({', '.join(self.identity_ids)}: {status})"


def _thread_count(threads: Optional[int]) -> int:
    import os

    if threads is not None:
        return max(1, int(threads))
    env = os.environ.get("HOMNARY_THREADS")
    return max(1, int(env)) if env else 1


def _map_ordered(fn, items: Sequence, threads: Optional[int]) -> Iterable:
    """Order-preserving map; chunks across a thread pool when asked to.

    The work items are pure functions of immutable bundles, so the result is
    identical (and deterministically ordered) at any thread count.
    """
    k = _thread_count(threads)
    if k <= 1 or len(items) < 2:
        return [fn(it) for it in items]
    with ThreadPoolExecutor(max_workers=k) as pool:
        return list(pool.map(fn, items))


# ---------------------------------------------------------------------------
# identity checkers
# ---------------------------------------------------------------------------


def check_super_skew(product) -> ResidualReport:
    """Adjacent-transposition residuals over the declared skew range.

    Canonically stored products pass by construction; the check earns its
    keep on raw (uncanonicalized) tables coming from external files.
    """
    space, arity, prefix = product.space, product.arity, product.skew_prefix_len
    report = ResidualReport(("super_skew",))
    for t in all_tuples(space.dim, arity):
        base = product.evaluate_basis(t)
        for i in range(prefix - 1):
            swapped = list(t)
            swapped[i], swapped[i + 1] = swapped[i + 1], swapped[i]
            other = product.evaluate_basis(tuple(swapped))
            koszul = -1 if (space.parities[t[i]] and space.parities[t[i + 1]]) else 1
            residual = vec_add(base, vec_scale(other, ONE * koszul))
            report.add("super_skew", (t, i), residual)
    return report.sort()


def _product_of(alg) -> MultiLinearProduct:
    if isinstance(alg, NHomLieSuper):
        return alg.bracket
    if isinstance(alg, NHomPreLieSuper):
        return alg.brace
    if isinstance(alg, HomPreLieSuper):
        return alg.circ
    raise MalformedInputError(f"not an algebra bundle: {type(alg).__name__}")


def check_multiplicativity(alg) -> ResidualReport:
    """Residual of twist(prod(args)) - prod(twist(args)) on every basis tuple."""
    product = _product_of(alg)
    alpha = alg.alpha
    report = ResidualReport(("multiplicativity",))
    alpha_cols = [alpha.column(j) for j in range(alg.space.dim)]
    for t in all_tuples(alg.space.dim, product.arity):
        lhs = alpha.apply(product.evaluate_basis(t))
        rhs = product.evaluate([alpha_cols[i] for i in t])
        report.add("multiplicativity", (t,), vec_sub(lhs, rhs))
    return report.sort()


def check_hom_nambu(alg: NHomLieSuper, alphas: Optional[Sequence[EvenLinearMap]] = None,
                    full_loops: bool = False, threads: Optional[int] = None) -> ResidualReport:
    """Twisted fundamental identity of the n-ary bracket.

    ``alphas`` optionally supplies the general family of n-1 twist maps; by
    default every slot uses the bundle's single map.  In a right-hand term
    the i-th argument is replaced by the inner bracket and the surviving
    arguments pick up the twist maps in order.
    """
    n = alg.n
    bracket = alg.bracket
    space = alg.space
    if alphas is None:
        alphas = [alg.alpha] * (n - 1)
    if len(alphas) != n - 1:
        raise MalformedInputError(f"expected {n - 1} twist maps, got {len(alphas)}")
    for a in alphas:
        _require_even_endo(a, space, "family")
    twisted = [[a.column(j) for j in range(space.dim)] for a in alphas]

    if full_loops:
        x_tuples = list(all_tuples(space.dim, n - 1))
    else:
        x_tuples = list(canonical_tuples(space, n - 1, n - 1))
    y_tuples = list(all_tuples(space.dim, n))

    def residual_for(xs: Tuple[int, ...]) -> List[Violation]:
        found = []
        x_total = tuple_parity(xs, space)
        lhs_args = [twisted[k][xs[k]] for k in range(n - 1)]
        for ys in y_tuples:
            inner_y = bracket.evaluate_basis(ys)
            lhs = bracket.evaluate(lhs_args + [inner_y])
            rhs: Vec = {}
            y_prefix_parity = 0
            for i in range(n):
                # sign (-1)^{|X| * |Y|^{i-1}}
                sign = -1 if (x_total and y_prefix_parity) else 1
                inner = bracket.evaluate_basis(xs + (ys[i],))
                args: List[Vec] = []
                slot = 0
                for j in range(n):
                    if j == i:
                        args.append(inner)
                    else:
                        args.append(twisted[slot][ys[j]])
                        slot += 1
                term = bracket.evaluate(args)
                rhs = vec_add(rhs, term if sign == 1 else vec_neg(term))
                y_prefix_parity ^= space.parities[ys[i]]
            res = vec_sub(lhs, rhs)
            if res:
                found.append(_violation("hom_nambu", (xs, ys), res))
        return found

    report = ResidualReport(("hom_nambu",))
    for chunk in _map_ordered(residual_for, x_tuples, threads):
        report.violations.extend(chunk)
    return report.sort()


def subadjacent_bracket(alg: NHomPreLieSuper) -> NHomLieSuper:
    """Signed symmetrization of the pre-Lie product: each argument is moved to
    the last slot with the factor (-1)^{n-i} (-1)^{|x_i| |X|_{i+1}}."""
    n = alg.n
    space = alg.space
    brace = alg.brace

    def value(t: Tuple[int, ...]) -> Vec:
        out: Vec = {}
        for i in range(n):
            tail_parity = tuple_parity(t[i + 1:], space)
            sign = 1 if (n - 1 - i) % 2 == 0 else -1
            if space.parities[t[i]] and tail_parity:
                sign = -sign
            term = brace.evaluate_basis(t[:i] + t[i + 1:] + (t[i],))
            out = vec_add(out, term if sign == 1 else vec_neg(term))
        return out

    bracket = MultiLinearProduct.build(space, n, n, value, allow_large=True)
    return NHomLieSuper(space, bracket, alg.alpha)


def _sub_bracket_vec(alg: NHomPreLieSuper):
    sub = subadjacent_bracket(alg)
    return sub.bracket


def check_n_hom_pre_lie(alg: NHomPreLieSuper, full_loops: bool = False,
                        threads: Optional[int] = None) -> ResidualReport:
    """The two defining identities of an n-ary twisted pre-Lie superproduct.

    ``preLie1`` rewrites the nested product with twisted outer arguments in
    terms of insertions of the subadjacent bracket; ``preLie2`` expands the
    product whose first slot carries the subadjacent bracket.
    """
    n = alg.n
    space = alg.space
    brace = alg.brace
    alpha_cols = [alg.alpha.column(j) for j in range(space.dim)]
    sub = _sub_bracket_vec(alg)
    par = space.parities

    report = ResidualReport(("preLie1", "preLie2"))

    if full_loops:
        x1_tuples = list(all_tuples(space.dim, n - 1))
        x2_tuples = list(all_tuples(space.dim, n))
    else:
        x1_tuples = list(canonical_tuples(space, n - 1, n - 1))
        x2_tuples = list(canonical_tuples(space, n, n))

    def pre_lie_1(xs: Tuple[int, ...]) -> List[Violation]:
        found = []
        x_total = tuple_parity(xs, space)
        lhs_prefix = [alpha_cols[i] for i in xs]
        for ys in all_tuples(space.dim, n):
            lhs = brace.evaluate(lhs_prefix + [brace.evaluate_basis(ys)])
            rhs: Vec = {}
            y_prefix = 0
            for i in range(n - 1):
                sign = -1 if (x_total and y_prefix) else 1
                inner = sub.evaluate_basis(xs + (ys[i],))
                args = [alpha_cols[ys[j]] if j != i else inner for j in range(n)]
                term = brace.evaluate(args)
                rhs = vec_add(rhs, term if sign == 1 else vec_neg(term))
                y_prefix ^= par[ys[i]]
            # trailing term: product of x-block moved onto the last argument
            sign = -1 if (x_total and y_prefix) else 1
            inner = brace.evaluate_basis(xs + (ys[n - 1],))
            term = brace.evaluate([alpha_cols[ys[j]] for j in range(n - 1)] + [inner])
            rhs = vec_add(rhs, term if sign == 1 else vec_neg(term))
            res = vec_sub(lhs, rhs)
            if res:
                found.append(_violation("preLie1", (xs, ys), res))
        return found

    def pre_lie_2(xs: Tuple[int, ...]) -> List[Violation]:
        found = []
        sub_val = sub.evaluate_basis(xs)
        for ys in all_tuples(space.dim, n - 1):
            lhs = brace.evaluate([sub_val] + [alpha_cols[i] for i in ys])
            rhs: Vec = {}
            for i in range(n):
                tail = tuple_parity(xs[i + 1:], space)
                sign = 1 if (n - 1 - i) % 2 == 0 else -1
                if par[xs[i]] and tail:
                    sign = -sign
                inner = brace.evaluate_basis((xs[i],) + ys)
                args = [alpha_cols[xs[j]] for j in range(n) if j != i] + [inner]
                term = brace.evaluate(args)
                rhs = vec_add(rhs, term if sign == 1 else vec_neg(term))
            res = vec_sub(lhs, rhs)
            if res:
                found.append(_violation("preLie2", (xs, ys), res))
        return found

    for chunk in _map_ordered(pre_lie_1, x1_tuples, threads):
        report.violations.extend(chunk)
    for chunk in _map_ordered(pre_lie_2, x2_tuples, threads):
        report.violations.extend(chunk)
    return report.sort()


def check_hom_pre_lie(alg: HomPreLieSuper) -> ResidualReport:
    """Twisted left-symmetry of a binary superproduct."""
    space = alg.space
    circ = alg.circ
    alpha_cols = [alg.alpha.column(j) for j in range(space.dim)]

    def associator(x: int, y: int, z: int) -> Vec:
        first = circ.evaluate([alpha_cols[x], circ.evaluate_basis((y, z))])
        second = circ.evaluate([circ.evaluate_basis((x, y)), alpha_cols[z]])
        return vec_sub(first, second)

    report = ResidualReport(("hom_pre_lie",))
    for x, y, z in all_tuples(space.dim, 3):
        res = associator(x, y, z)
        swapped = associator(y, x, z)
        if space.parities[x] and space.parities[y]:
            res = vec_add(res, swapped)
        else:
            res = vec_sub(res, swapped)
        report.add("hom_pre_lie", ((x, y, z),), res)
    return report.sort()


def left_mult(alg: NHomPreLieSuper) -> ActionTensor:
    """Left multiplication: the module argument fills the last product slot."""
    n = alg.n
    return ActionTensor.build(
        alg.space, alg.space, n - 1, n - 1,
        lambda idx, v: alg.brace.evaluate_basis(idx + (v,)),
        allow_large=True,
    )


def right_mult(alg: NHomPreLieSuper) -> ActionTensor:
    """Right multiplication: the module argument fills the first product slot.

    The stored table is the plain coefficient table of {v, x_1, ..., x_{n-1}};
    consumers apply it with the Koszul crossing factor (``apply_graded``).
    """
    n = alg.n
    return ActionTensor.build(
        alg.space, alg.space, n - 1, n - 2,
        lambda idx, v: alg.brace.evaluate_basis((v,) + idx),
        allow_large=True,
    )
