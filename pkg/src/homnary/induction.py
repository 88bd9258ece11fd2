"""Building an n-ary twisted pre-Lie superproduct from a binary one.

An even super-skew-symmetric scalar form with n-2 slots contracts away all
but one argument of a binary Hom-pre-Lie superproduct:

    {x_1, ..., x_n} = sum_k (-1)^{k+1} (-1)^{p(x_k) p(x_{k+1}..x_{n-1})}
                      Phi(x_1, .., x_k omitted, .., x_{n-1}) * (x_k o x_n).

The arity of the form is the single source of truth for n (= arity + 2).
Three side conditions on the form (product closure, twist invariance in the
first slot, and the wedge-contraction condition) are exposed as a residual
checker; the construction itself runs regardless, so a discrepancy between
the conditions and the induced structure's axioms is observable rather than
assumed away.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Mapping, Tuple

from .algebras import HomPreLieSuper, NHomPreLieSuper, ResidualReport
from .errors import MalformedInputError, PreconditionError
from .graded import GradedSpace, canonical_skew_key, tuple_parity
from .representations import (
    HomPreLieRepBundle,
    PreLieRepBundle,
    check_hom_pre_lie_representation,
)
from .scalars import ONE, Q
from .tensors import (
    ActionTensor,
    Vec,
    MultiLinearProduct,
    all_tuples,
    basis_vec,
    vec_add,
    vec_scale,
)


@dataclass(frozen=True)
class PhiForm:
    """Even super-skew-symmetric multilinear scalar form, canonically stored.

    ``coeffs`` is keyed by sorted index tuples; entries on tuples of odd
    total parity are rejected (evenness), as are entries at tuples a repeated
    even index forces to zero.
    """

    space: GradedSpace
    arity: int
    coeffs: Mapping[Tuple[int, ...], object]

    def __post_init__(self):
        if self.arity < 1:
            raise MalformedInputError("form arity must be >= 1")
        cleaned: Dict[Tuple[int, ...], object] = {}
        for idx, c in self.coeffs.items():
            idx = tuple(idx)
            if len(idx) != self.arity:
                raise MalformedInputError(f"form key {idx} has wrong arity")
            c = Q(0) + c
            if not c:
                continue
            key = canonical_skew_key(idx, self.space, self.arity)
            if key.zero:
                raise MalformedInputError(
                    f"form entry at {idx} must vanish (repeated even index)")
            if key.indices != idx:
                raise MalformedInputError(f"form key {idx} is not canonical")
            if tuple_parity(idx, self.space):
                raise MalformedInputError(
                    f"form entry at {idx} violates evenness (odd total parity)")
            cleaned[idx] = c
        object.__setattr__(self, "coeffs", cleaned)

    @classmethod
    def from_raw(cls, space: GradedSpace, arity: int,
                 raw: Mapping[Tuple[int, ...], object]) -> "PhiForm":
        canonical: Dict[Tuple[int, ...], object] = {}
        for idx, c in raw.items():
            idx = tuple(idx)
            c = Q(0) + c
            key = canonical_skew_key(idx, space, arity)
            if key.zero:
                if c:
                    raise MalformedInputError(f"form entry at {idx} must vanish")
                continue
            adjusted = c if key.sign == 1 else -c
            if key.indices in canonical:
                if canonical[key.indices] != adjusted:
                    raise MalformedInputError(f"inconsistent duplicate form key {idx}")
            elif adjusted:
                canonical[key.indices] = adjusted
        return cls(space, arity, canonical)

    def evaluate_basis(self, idx: Tuple[int, ...]):
        key = canonical_skew_key(idx, self.space, self.arity)
        if key.zero:
            return Q(0)
        c = self.coeffs.get(key.indices, Q(0))
        return c if key.sign == 1 else -c

    def evaluate(self, args) -> object:
        """Multilinear extension to sparse vector arguments."""
        import itertools

        total = Q(0)
        for combo in itertools.product(*(a.items() for a in args)):
            coeff = ONE
            for _, c in combo:
                coeff = coeff * c
            total = total + coeff * self.evaluate_basis(tuple(i for i, _ in combo))
        return total

    def scale(self, c) -> "PhiForm":
        return PhiForm(self.space, self.arity,
                       {k: v * c for k, v in self.coeffs.items()})

    def induction_arity(self) -> int:
        return self.arity + 2


def check_phi_conditions(phi: PhiForm, alg: HomPreLieSuper, n: int) -> ResidualReport:
    """The three side conditions of the induction theorem.

    * ``phi_closure``: the form kills any product value, inserted in any slot;
    * ``phi_alpha_invariance``: twisting the first slot changes nothing;
    * ``phi_wedge_delta``: for every contraction tuple X, the wedge of the
      form with the one-form y -> Phi(X, y) vanishes on all argument tuples
      (the sum runs over the slot moved to the end, with the factor
      (-1)^{k+1} (-1)^{p(y_k) p(y_{k+1}..y_{n-1})}).

    Residual "vectors" here are scalars, reported at basis index 0.
    """
    if phi.induction_arity() != n:
        raise MalformedInputError(
            f"form arity {phi.arity} induces arity {phi.induction_arity()}, not {n}")
    if phi.space.parities != alg.space.parities:
        raise MalformedInputError("form and algebra live on different spaces")
    space = alg.space
    par = space.parities
    report = ResidualReport(("phi_closure", "phi_alpha_invariance", "phi_wedge_delta"))

    def scalar_residual(identity_id, where, value):
        if value:
            report.add(identity_id, where, {0: value})

    # product closure: the product value occupies each slot in turn
    for pos in range(phi.arity):
        for xs in all_tuples(space.dim, phi.arity - 1):
            for y in range(space.dim):
                for z in range(space.dim):
                    prod = alg.circ.evaluate_basis((y, z))
                    if not prod:
                        continue
                    args = [basis_vec(i) for i in xs]
                    args.insert(pos, prod)
                    scalar_residual("phi_closure", (pos, xs, (y, z)),
                                    phi.evaluate(args))

    alpha_cols = [alg.alpha.column(j) for j in range(space.dim)]
    for xs in all_tuples(space.dim, phi.arity):
        twisted = [alpha_cols[xs[0]]] + [basis_vec(i) for i in xs[1:]]
        scalar_residual("phi_alpha_invariance", (xs,),
                        phi.evaluate(twisted) - phi.evaluate_basis(xs))

    for X in all_tuples(space.dim, n - 3):
        for Y in all_tuples(space.dim, n - 1):
            total = Q(0)
            for k in range(n - 1):
                tail = tuple_parity(Y[k + 1:], space)
                sign = 1 if k % 2 == 0 else -1  # (-1)^{k+1}, 1-based k
                if par[Y[k]] and tail:
                    sign = -sign
                term = phi.evaluate_basis(Y[:k] + Y[k + 1:]) * phi.evaluate_basis(X + (Y[k],))
                total = total + term if sign == 1 else total - term
            scalar_residual("phi_wedge_delta", (X, Y), total)
    return report.sort()


def induce_nary_product(phi: PhiForm, alg: HomPreLieSuper, n: int) -> NHomPreLieSuper:
    """Contract n-2 arguments with the form; the twist map is inherited."""
    if phi.induction_arity() != n:
        raise MalformedInputError(
            f"form arity {phi.arity} induces arity {phi.induction_arity()}, not {n}")
    if phi.space.parities != alg.space.parities:
        raise MalformedInputError("form and algebra live on different spaces")
    space = alg.space
    par = space.parities

    def value(t: Tuple[int, ...]) -> Vec:
        out: Vec = {}
        for k in range(n - 1):
            tail = tuple_parity(t[k + 1:n - 1], space)
            sign = 1 if k % 2 == 0 else -1
            if par[t[k]] and tail:
                sign = -sign
            coeff = phi.evaluate_basis(t[:k] + t[k + 1:n - 1])
            if not coeff:
                continue
            prod = alg.circ.evaluate_basis((t[k], t[n - 1]))
            term = vec_scale(prod, coeff if sign == 1 else -coeff)
            out = vec_add(out, term)
        return out

    brace = MultiLinearProduct.build(space, n, n - 1, value, allow_large=True)
    return NHomPreLieSuper(space, brace, alg.alpha)


def extend_phi_by_zero(phi: PhiForm, extra: GradedSpace) -> PhiForm:
    """The same form on algebra + module, vanishing whenever any argument has
    a module component; used by the induced-representation consistency check."""
    total = GradedSpace.concat(phi.space, extra)
    return PhiForm(total, phi.arity, dict(phi.coeffs))


def induce_representation(phi: PhiForm, rep: HomPreLieRepBundle, n: int,
                          strict: bool = False) -> PreLieRepBundle:
    """Induced actions over the induced n-ary product:

    * the left action contracts like the product, acting through l(x_k);
    * the right action is Phi(x_1, .., x_{n-2}) r(x_{n-1}).

    With ``strict=True`` the stated preconditions (binary module identities
    and the form conditions) are enforced and failures raise with reports.
    """
    alg = rep.alg
    if phi.induction_arity() != n:
        raise MalformedInputError(
            f"form arity {phi.arity} induces arity {phi.induction_arity()}, not {n}")
    if strict:
        rep_ok = check_hom_pre_lie_representation(rep)
        if not rep_ok.ok:
            raise PreconditionError("binary bundle is not a representation", report=rep_ok)
        phi_ok = check_phi_conditions(phi, alg, n)
        if not phi_ok.ok:
            raise PreconditionError("form conditions fail", report=phi_ok)
    induced = induce_nary_product(phi, alg, n)
    space = alg.space
    vspace = rep.space_v
    par = space.parities

    def l_entry(idx: Tuple[int, ...], v: int) -> Vec:
        out: Vec = {}
        for k in range(n - 1):
            tail = tuple_parity(idx[k + 1:], space)
            sign = 1 if k % 2 == 0 else -1
            if par[idx[k]] and tail:
                sign = -sign
            coeff = phi.evaluate_basis(idx[:k] + idx[k + 1:])
            if not coeff:
                continue
            term = rep.l.apply([basis_vec(idx[k])], basis_vec(v))
            out = vec_add(out, vec_scale(term, coeff if sign == 1 else -coeff))
        return out

    def r_entry(idx: Tuple[int, ...], v: int) -> Vec:
        coeff = phi.evaluate_basis(idx[: n - 2])
        if not coeff:
            return {}
        term = rep.r.matrix_basis((idx[n - 2],)).get(v, {})
        return vec_scale(term, coeff)

    l_phi = ActionTensor.build(space, vspace, n - 1, n - 1, l_entry, allow_large=True)
    r_phi = ActionTensor.build(space, vspace, n - 1, n - 2, r_entry, allow_large=True)
    return PreLieRepBundle(induced, vspace, l_phi, r_phi, rep.alpha_v)
