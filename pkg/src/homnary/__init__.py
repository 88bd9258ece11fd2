"""Exact-arithmetic toolkit for finite-dimensional Z2-graded n-ary Hom-algebras.

Structures (n-Hom-Lie, n-Hom-pre-Lie and binary Hom-pre-Lie superalgebras,
their representations, and the operators acting on them) are stored by
structure constants over exact rationals.  Every defining identity is exposed
as a residual-reporting checker: the report lists each basis tuple where the
identity fails together with the exact nonzero residual vector, so a verdict
is never a tolerance call.

Index conventions used throughout:

* basis indices are 0-based in code and 1-based in serialized documents;
* a parity is 0 (even) or 1 (odd), and every basis vector is homogeneous;
* products super-skew-symmetric in a prefix of their slots are stored only on
  canonical (prefix-sorted) index tuples, with Koszul signs recovered on
  lookup.
"""

from .errors import HomnaryError, MalformedInputError, PreconditionError, SingularMapError
from .scalars import BACKEND, Q, rat_from_string, rat_to_string
from .graded import GradedSpace, IndexTupleKey, canonical_skew_key, koszul_sign, tuple_parity
from .tensors import ActionTensor, EvenLinearMap, MultiLinearProduct, RawProduct
from .algebras import (
    HomPreLieSuper,
    NHomLieSuper,
    NHomPreLieSuper,
    ResidualReport,
    Violation,
    check_hom_nambu,
    check_hom_pre_lie,
    check_multiplicativity,
    check_n_hom_pre_lie,
    check_super_skew,
    left_mult,
    right_mult,
    subadjacent_bracket,
)
from .representations import (
    HomPreLieRepBundle,
    LieRepBundle,
    PreLieRepBundle,
    adjoint_lie_representation,
    adjoint_pre_lie_representation,
    check_hom_pre_lie_representation,
    check_lie_representation,
    check_pre_lie_representation,
    dual_lie_representation,
    dual_pre_lie_representation,
    mu_map,
    rho_tilde,
    semidirect_hom_pre_lie,
    semidirect_lie,
    semidirect_pre_lie,
    tensor_representation,
    twist_representation,
)
from .operators import (
    check_o_operator_lie,
    check_o_operator_pre_lie,
    check_rota_baxter_lie,
    compatible_from_invertible_T,
    enumerate_even_maps,
    graph_subalgebra_check,
    induced_pre_lie_from_o_operator,
    lift_NT,
    nijenhuis_check,
    pre_lie_from_commuting_rb_pair,
    rb_deformed_brace,
    search_o_operators,
    search_rota_baxter,
)
from .induction import PhiForm, check_phi_conditions, induce_nary_product, induce_representation

__version__ = "0.1.0"
