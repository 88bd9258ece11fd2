"""Rota-Baxter, relative (O-) operators, Nijenhuis operators, and the algebra
structures they induce.

The subset-substitution rule shared by the weighted Rota-Baxter identity and
the Nijenhuis identity is implemented once: for a nonempty subset I of slots,
slot i keeps its argument when i is in I and otherwise receives the operator
image (twisted s times in the Rota-Baxter case).  The two identities differ
only in the prefactor: the scalar weight^{ |I|-1 } versus the operator power
N^{ |I|-1 } applied to the bracket value.
"""

from __future__ import annotations

import itertools
from typing import Iterator, List, Optional, Sequence, Tuple

from .algebras import (
    NHomLieSuper,
    NHomPreLieSuper,
    ResidualReport,
)
from .errors import MalformedInputError, PreconditionError
from .graded import GradedSpace, tuple_parity
from .representations import (
    LieRepBundle,
    PreLieRepBundle,
    adjoint_pre_lie_representation,
    semidirect_lie,
)
from .scalars import ONE, Q
from .tensors import (
    EvenLinearMap,
    MultiLinearProduct,
    Vec,
    basis_vec,
    canonical_tuples,
    vec_add,
    vec_neg,
    vec_scale,
    vec_sub,
)


def _check_even_map(T: EvenLinearMap, space_in: GradedSpace, space_out: GradedSpace, what: str):
    if T.space_in.parities != space_in.parities or T.space_out.parities != space_out.parities:
        raise MalformedInputError(f"{what} has wrong shape for the given bundle")


# ---------------------------------------------------------------------------
# Rota-Baxter / Nijenhuis on n-Hom-Lie superalgebras
# ---------------------------------------------------------------------------


def check_rota_baxter_lie(R: EvenLinearMap, alg: NHomLieSuper, weight=None,
                          power: int = 0) -> ResidualReport:
    """s-twisted Rota-Baxter identity of the given weight, plus commutation
    with the twist map (id ``rb_twist_commute``)."""
    weight = Q(0) if weight is None else Q(0) + weight
    _check_even_map(R, alg.space, alg.space, "operator")
    n = alg.n
    space = alg.space
    report = ResidualReport(("rota_baxter", "rb_twist_commute"))

    comm = R.compose(alg.alpha) - alg.alpha.compose(R)
    for j in range(space.dim):
        report.add("rb_twist_commute", (j,), comm.column(j))

    aR = alg.alpha.power(power).compose(R)
    r_cols = [R.column(j) for j in range(space.dim)]
    ar_cols = [aR.column(j) for j in range(space.dim)]
    weight_pows = [ONE]
    for _ in range(n):
        weight_pows.append(weight_pows[-1] * weight)

    for xs in canonical_tuples(space, n, n):
        lhs = alg.bracket.evaluate([r_cols[i] for i in xs])
        inner: Vec = {}
        for mask in range(1, 1 << n):
            args = [basis_vec(xs[i]) if (mask >> i) & 1 else ar_cols[xs[i]] for i in range(n)]
            term = alg.bracket.evaluate(args)
            size = bin(mask).count("1")
            inner = vec_add(inner, vec_scale(term, weight_pows[size - 1]))
        rhs = R.apply(inner)
        report.add("rota_baxter", (xs,), vec_sub(lhs, rhs))
    return report.sort()


def nijenhuis_check(N: EvenLinearMap, alg: NHomLieSuper) -> ResidualReport:
    """Nijenhuis deviation: the prefactor is the operator power N^{ |I|-1 }
    applied to each bracket value before the outer N."""
    _check_even_map(N, alg.space, alg.space, "operator")
    n = alg.n
    space = alg.space
    n_cols = [N.column(j) for j in range(space.dim)]
    powers = [EvenLinearMap.identity(space)]
    for _ in range(n):
        powers.append(N.compose(powers[-1]))
    report = ResidualReport(("nijenhuis",))
    for xs in canonical_tuples(space, n, n):
        lhs = alg.bracket.evaluate([n_cols[i] for i in xs])
        inner: Vec = {}
        for mask in range(1, 1 << n):
            args = [basis_vec(xs[i]) if (mask >> i) & 1 else n_cols[xs[i]] for i in range(n)]
            term = alg.bracket.evaluate(args)
            size = bin(mask).count("1")
            inner = vec_add(inner, powers[size - 1].apply(term))
        rhs = N.apply(inner)
        report.add("nijenhuis", (xs,), vec_sub(lhs, rhs))
    return report.sort()


# ---------------------------------------------------------------------------
# O-operators on n-Hom-Lie representations
# ---------------------------------------------------------------------------


def _o_operator_rhs(T: EvenLinearMap, rep: LieRepBundle, us: Tuple[int, ...]) -> Vec:
    """T applied to the signed rho-sum moving each module argument last."""
    n = rep.n
    vspace = rep.space_v
    t_cols = [T.column(j) for j in range(vspace.dim)]
    inner: Vec = {}
    for i in range(n):
        tail = tuple_parity(us[i + 1:], vspace)
        sign = 1 if (n - 1 - i) % 2 == 0 else -1
        if vspace.parities[us[i]] and tail:
            sign = -sign
        args = [t_cols[us[j]] for j in range(n) if j != i]
        term = rep.rho.apply(args, basis_vec(us[i]))
        inner = vec_add(inner, term if sign == 1 else vec_neg(term))
    return T.apply(inner)


def check_o_operator_lie(T: EvenLinearMap, rep: LieRepBundle) -> ResidualReport:
    """Relative Rota-Baxter property of T: V -> algebra, plus twist
    intertwining (id ``o_op_twist``)."""
    _check_even_map(T, rep.space_v, rep.alg.space, "operator")
    n = rep.n
    vspace = rep.space_v
    report = ResidualReport(("o_operator", "o_op_twist"))
    comm = rep.alg.alpha.compose(T) - T.compose(rep.alpha_v)
    for j in range(vspace.dim):
        report.add("o_op_twist", (j,), comm.column(j))
    t_cols = [T.column(j) for j in range(vspace.dim)]
    for us in canonical_tuples(vspace, n, n):
        lhs = rep.alg.bracket.evaluate([t_cols[i] for i in us])
        rhs = _o_operator_rhs(T, rep, us)
        report.add("o_operator", (us,), vec_sub(lhs, rhs))
    return report.sort()


def graph_subalgebra_check(T: EvenLinearMap, rep: LieRepBundle):
    """Is the graph of T closed in the semidirect product (bracket and twist)?

    Returns ``(True, None)`` or ``(False, witness)``; the witness is either
    ``("twist", v)`` or ``("bracket", module index tuple)``.
    """
    _check_even_map(T, rep.space_v, rep.alg.space, "operator")
    semi = semidirect_lie(rep)
    m = rep.alg.space.dim
    n = rep.n
    vspace = rep.space_v
    comm = rep.alg.alpha.compose(T) - T.compose(rep.alpha_v)
    for v in range(vspace.dim):
        if comm.column(v):
            return False, ("twist", v)
    graph = []
    for v in range(vspace.dim):
        g = {i: c for i, c in T.column(v).items()}
        g[m + v] = ONE
        graph.append(g)
    for us in canonical_tuples(vspace, n, n):
        w = semi.bracket.evaluate([graph[u] for u in us])
        w_alg = {i: c for i, c in w.items() if i < m}
        w_mod = {i - m: c for i, c in w.items() if i >= m}
        if vec_sub(w_alg, T.apply(w_mod)):
            return False, ("bracket", us)
    return True, None


def lift_NT(T: EvenLinearMap, rep: LieRepBundle) -> EvenLinearMap:
    """Strictly upper-triangular lift (x, u) -> (T u, 0) on algebra + module."""
    _check_even_map(T, rep.space_v, rep.alg.space, "operator")
    m = rep.alg.space.dim
    total = GradedSpace.concat(rep.alg.space, rep.space_v)
    entries = {}
    for v in range(rep.space_v.dim):
        for i, c in T.column(v).items():
            entries[(i, m + v)] = c
    lift = EvenLinearMap.from_entries(total, total, entries)
    assert lift.compose(lift).is_zero()  # block shape forces square zero
    return lift


def induced_pre_lie_from_o_operator(T: EvenLinearMap, rep: LieRepBundle,
                                    strict: bool = True) -> NHomPreLieSuper:
    """Splitting of the bracket through an O-operator: the module carries the
    product rho(T u_1, ..., T u_{n-1}) u_n."""
    if strict:
        rep_ok = check_o_operator_lie(T, rep)
        if not rep_ok.ok:
            raise PreconditionError("T is not an O-operator for this bundle", report=rep_ok)
    n = rep.n
    vspace = rep.space_v
    t_cols = [T.column(j) for j in range(vspace.dim)]

    def value(t: Tuple[int, ...]) -> Vec:
        return rep.rho.apply([t_cols[i] for i in t[:-1]], basis_vec(t[-1]))

    brace = MultiLinearProduct.build(vspace, n, n - 1, value, allow_large=True)
    return NHomPreLieSuper(vspace, brace, rep.alpha_v)


def compatible_from_invertible_T(T: EvenLinearMap, rep: LieRepBundle,
                                 strict: bool = True) -> NHomPreLieSuper:
    """Compatible product on the algebra itself from an invertible O-operator:
    last slot pulled back through T, action applied, pushed forward again."""
    t_inv = T.inverse("T")
    if strict:
        rep_ok = check_o_operator_lie(T, rep)
        if not rep_ok.ok:
            raise PreconditionError("T is not an O-operator for this bundle", report=rep_ok)
    n = rep.n
    space = rep.alg.space

    def value(t: Tuple[int, ...]) -> Vec:
        acted = rep.rho.apply([basis_vec(i) for i in t[:-1]], t_inv.column(t[-1]))
        return T.apply(acted)

    brace = MultiLinearProduct.build(space, n, n - 1, value, allow_large=True)
    return NHomPreLieSuper(space, brace, rep.alg.alpha)


# ---------------------------------------------------------------------------
# O-operators on n-Hom-pre-Lie representations; Rota-Baxter on products
# ---------------------------------------------------------------------------


def check_o_operator_pre_lie(T: EvenLinearMap, rep: PreLieRepBundle) -> ResidualReport:
    """Relative Rota-Baxter property against a pre-Lie module: the l-term
    keeps the last argument, the r-terms move each earlier argument out with
    the factor (-1)^{i+1} (-1)^{p(u_i) |U|_{i+1}}."""
    _check_even_map(T, rep.space_v, rep.alg.space, "operator")
    n = rep.n
    vspace = rep.space_v
    report = ResidualReport(("o_operator_pre_lie", "o_op_pre_lie_twist"))
    comm = rep.alg.alpha.compose(T) - T.compose(rep.alpha_v)
    for j in range(vspace.dim):
        report.add("o_op_pre_lie_twist", (j,), comm.column(j))
    t_cols = [T.column(j) for j in range(vspace.dim)]
    for us in canonical_tuples(vspace, n, n - 1):
        lhs = rep.alg.brace.evaluate([t_cols[i] for i in us])
        inner = rep.l.apply([t_cols[i] for i in us[:-1]], basis_vec(us[-1]))
        args_parity_all = tuple_parity(us, vspace)
        for i in range(n - 1):
            pui = vspace.parities[us[i]]
            tail = tuple_parity(us[i + 1:], vspace)
            sign = 1 if i % 2 == 0 else -1  # (-1)^{i+1}, 1-based
            if pui and tail:
                sign = -sign
            args = [t_cols[us[j]] for j in range(n) if j != i]
            term = rep.r.apply_graded(args, args_parity_all ^ pui, basis_vec(us[i]), pui)
            inner = vec_add(inner, term if sign == 1 else vec_neg(term))
        rhs = T.apply(inner)
        report.add("o_operator_pre_lie", (us,), vec_sub(lhs, rhs))
    return report.sort()


def check_rota_baxter_pre_lie(P: EvenLinearMap, alg: NHomPreLieSuper) -> ResidualReport:
    """Weight-zero Rota-Baxter on a pre-Lie product: the relative property
    against the bundle's own left/right multiplications."""
    return check_o_operator_pre_lie(P, adjoint_pre_lie_representation(alg))


def rb_deformed_brace(P: EvenLinearMap, alg: NHomPreLieSuper,
                      strict: bool = True) -> NHomPreLieSuper:
    """Deformed product: sum over slots of the product with every other
    argument passed through P."""
    if strict:
        ok = check_rota_baxter_pre_lie(P, alg)
        if not ok.ok:
            raise PreconditionError("P is not a weight-zero Rota-Baxter operator", report=ok)
    n = alg.n
    p_cols = [P.column(j) for j in range(alg.space.dim)]

    def value(t: Tuple[int, ...]) -> Vec:
        out: Vec = {}
        for i in range(n):
            args = [p_cols[t[j]] if j != i else basis_vec(t[j]) for j in range(n)]
            out = vec_add(out, alg.brace.evaluate(args))
        return out

    brace = MultiLinearProduct.build(alg.space, n, n - 1, value, allow_large=True)
    return NHomPreLieSuper(alg.space, brace, alg.alpha)


def pre_lie_from_commuting_rb_pair(P1: EvenLinearMap, P2: EvenLinearMap,
                                   alg: NHomLieSuper, strict: bool = True):
    """From a commuting pair of weight-zero Rota-Baxter operators: the product
    [P1 x_1, ..., P1 x_{n-1}, x_n], together with the verdict that P2 is a
    weight-zero Rota-Baxter operator on it."""
    if not P1.compose(P2) == P2.compose(P1):
        raise PreconditionError("the operators do not commute")
    if strict:
        for name, P in (("P1", P1), ("P2", P2)):
            ok = check_rota_baxter_lie(P, alg, weight=Q(0), power=0)
            if not ok.ok:
                raise PreconditionError(f"{name} is not a weight-zero Rota-Baxter operator",
                                        report=ok)
    n = alg.n
    p_cols = [P1.column(j) for j in range(alg.space.dim)]

    def value(t: Tuple[int, ...]) -> Vec:
        return alg.bracket.evaluate([p_cols[i] for i in t[:-1]] + [basis_vec(t[-1])])

    brace = MultiLinearProduct.build(alg.space, n, n - 1, value, allow_large=True)
    induced = NHomPreLieSuper(alg.space, brace, alg.alpha)
    verdict = check_rota_baxter_pre_lie(P2, induced)
    return induced, verdict


# ---------------------------------------------------------------------------
# deterministic grid search (test scaffolding, not a solver API)
# ---------------------------------------------------------------------------


def enumerate_even_maps(space_in: GradedSpace, space_out: GradedSpace,
                        values: Sequence, max_nonzero: Optional[int] = None
                        ) -> Iterator[EvenLinearMap]:
    """Even maps with entries drawn from ``values``, in a fixed deterministic
    order: by number of nonzero entries, then by position, then by value.

    ``values`` should not contain zero; the zero map is yielded first.
    Capping ``max_nonzero`` keeps the enumeration tractable.
    """
    positions = [
        (i, j)
        for i in range(space_out.dim)
        for j in range(space_in.dim)
        if space_out.parities[i] == space_in.parities[j]
    ]
    vals = [Q(0) + v for v in values if v]
    cap = len(positions) if max_nonzero is None else min(max_nonzero, len(positions))
    yield EvenLinearMap.zero(space_in, space_out)
    for k in range(1, cap + 1):
        for spots in itertools.combinations(positions, k):
            for choice in itertools.product(vals, repeat=k):
                yield EvenLinearMap.from_entries(space_in, space_out,
                                                 dict(zip(spots, choice)))


def search_o_operators(rep: LieRepBundle, values: Sequence, limit: Optional[int] = None,
                       max_nonzero: Optional[int] = 2) -> List[EvenLinearMap]:
    found = []
    for T in enumerate_even_maps(rep.space_v, rep.alg.space, values, max_nonzero):
        if check_o_operator_lie(T, rep).ok:
            found.append(T)
            if limit is not None and len(found) >= limit:
                break
    return found


def search_rota_baxter(alg: NHomLieSuper, values: Sequence, weight=None, power: int = 0,
                       limit: Optional[int] = None,
                       max_nonzero: Optional[int] = 2) -> List[EvenLinearMap]:
    found = []
    for R in enumerate_even_maps(alg.space, alg.space, values, max_nonzero):
        if check_rota_baxter_lie(R, alg, weight=weight, power=power).ok:
            found.append(R)
            if limit is not None and len(found) >= limit:
                break
    return found


def search_rota_baxter_pre_lie(alg: NHomPreLieSuper, values: Sequence,
                               limit: Optional[int] = None,
                               max_nonzero: Optional[int] = 2) -> List[EvenLinearMap]:
    rep = adjoint_pre_lie_representation(alg)
    found = []
    for P in enumerate_even_maps(alg.space, alg.space, values, max_nonzero):
        if check_o_operator_pre_lie(P, rep).ok:
            found.append(P)
            if limit is not None and len(found) >= limit:
                break
    return found
