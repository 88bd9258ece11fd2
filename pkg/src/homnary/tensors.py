"""Sparse exact-rational tensors: vectors, even maps, products, action tensors.

A vector is a sparse dict ``{basis index: Scalar}`` with no explicit zeros.
A ``MultiLinearProduct`` stores an n-ary vector-valued product by structure
constants on canonical index tuples only; an ``ActionTensor`` stores an
operator-valued multilinear map (n-1 algebra slots acting on a module) the
same way.  Lookups at non-canonical tuples recover the Koszul sign; tuples
whose coefficient is forced to zero by skew-symmetry are never stored.
"""

from __future__ import annotations

import itertools
from typing import Callable, Dict, Iterable, Iterator, Mapping, Sequence, Tuple

from .errors import MalformedInputError, SingularMapError
from .graded import GradedSpace, canonical_skew_key, tuple_parity
from .scalars import ONE, Q, ZERO

Vec = Dict[int, object]  # sparse column vector, values are backend rationals

DEFAULT_MAX_ARITY = 6
DEFAULT_MAX_DIM = 8


def guard_scale(arity: int, dim: int, allow_large: bool) -> None:
    # identity loops grow like dim**(2n-1); refuse silly sizes unless asked
    if allow_large:
        return
    if arity > DEFAULT_MAX_ARITY or dim > DEFAULT_MAX_DIM:
        raise MalformedInputError(
            f"arity {arity} / dim {dim} exceeds default bounds "
            f"({DEFAULT_MAX_ARITY}, {DEFAULT_MAX_DIM}); pass allow_large=True to override"
        )


# ---------------------------------------------------------------------------
# sparse vector helpers
# ---------------------------------------------------------------------------

def vec_add(a: Vec, b: Vec) -> Vec:
    out = dict(a)
    for k, v in b.items():
        s = out.get(k)
        s = v if s is None else s + v
        if s:
            out[k] = s
        elif k in out:
            del out[k]
    return out


def vec_sub(a: Vec, b: Vec) -> Vec:
    out = dict(a)
    for k, v in b.items():
        s = out.get(k)
        s = -v if s is None else s - v
        if s:
            out[k] = s
        elif k in out:
            del out[k]
    return out


def vec_scale(a: Vec, c) -> Vec:
    if not c:
        return {}
    return {k: v * c for k, v in a.items()}


def vec_neg(a: Vec) -> Vec:
    return {k: -v for k, v in a.items()}


def vec_is_zero(a: Vec) -> bool:
    return not a


def basis_vec(i: int) -> Vec:
    return {i: ONE}


def vec_equal(a: Vec, b: Vec) -> bool:
    return vec_is_zero(vec_sub(a, b))


def clean_vec(a: Mapping[int, object]) -> Vec:
    return {k: v for k, v in a.items() if v}


# ---------------------------------------------------------------------------
# even linear maps
# ---------------------------------------------------------------------------

class EvenLinearMap:
    """Parity-preserving linear map stored densely; rows index the output.

    ``rows[i][j]`` is the coefficient of ``e_i`` (output basis) in the image
    of ``e_j`` (input basis); evenness forces ``rows[i][j] == 0`` whenever the
    two parities differ.
    """

    __slots__ = ("space_in", "space_out", "rows")

    def __init__(self, space_in: GradedSpace, space_out: GradedSpace, rows):
        rows = tuple(tuple(Q(0) + c for c in row) for row in rows)
        if len(rows) != space_out.dim or any(len(r) != space_in.dim for r in rows):
            raise MalformedInputError(
                f"matrix shape {len(rows)}x{len(rows[0]) if rows else 0} does not match "
                f"dims {space_out.dim}x{space_in.dim}"
            )
        for i, row in enumerate(rows):
            for j, c in enumerate(row):
                if c and space_out.parities[i] != space_in.parities[j]:
                    raise MalformedInputError(
                        f"evenness violated at entry ({i}, {j}): "
                        f"parities {space_out.parities[i]} vs {space_in.parities[j]}"
                    )
        self.space_in = space_in
        self.space_out = space_out
        self.rows = rows

    # -- constructors ------------------------------------------------------

    @classmethod
    def identity(cls, space: GradedSpace) -> "EvenLinearMap":
        return cls(space, space, [[ONE if i == j else ZERO for j in range(space.dim)] for i in range(space.dim)])

    @classmethod
    def zero(cls, space_in: GradedSpace, space_out: GradedSpace) -> "EvenLinearMap":
        return cls(space_in, space_out, [[ZERO] * space_in.dim for _ in range(space_out.dim)])

    @classmethod
    def from_entries(cls, space_in: GradedSpace, space_out: GradedSpace,
                     entries: Mapping[Tuple[int, int], object]) -> "EvenLinearMap":
        rows = [[Q(0)] * space_in.dim for _ in range(space_out.dim)]
        for (i, j), c in entries.items():
            space_out.check_index(i)
            space_in.check_index(j)
            rows[i][j] = Q(0) + c
        return cls(space_in, space_out, rows)

    @classmethod
    def block_diag(cls, a: "EvenLinearMap", b: "EvenLinearMap") -> "EvenLinearMap":
        sin = GradedSpace.concat(a.space_in, b.space_in)
        sout = GradedSpace.concat(a.space_out, b.space_out)
        da, db = a.space_in.dim, b.space_in.dim
        rows = []
        for i in range(a.space_out.dim):
            rows.append(list(a.rows[i]) + [ZERO] * db)
        for i in range(b.space_out.dim):
            rows.append([ZERO] * da + list(b.rows[i]))
        return cls(sin, sout, rows)

    # -- arithmetic --------------------------------------------------------

    def apply(self, v: Vec) -> Vec:
        out: Vec = {}
        for j, c in v.items():
            for i in range(self.space_out.dim):
                m = self.rows[i][j]
                if m:
                    s = out.get(i, ZERO) + m * c
                    if s:
                        out[i] = s
                    elif i in out:
                        del out[i]
        return out

    def column(self, j: int) -> Vec:
        return {i: self.rows[i][j] for i in range(self.space_out.dim) if self.rows[i][j]}

    def compose(self, other: "EvenLinearMap") -> "EvenLinearMap":
        """self after other."""
        if other.space_out.parities != self.space_in.parities:
            raise MalformedInputError("composition shape mismatch")
        rows = [
            [
                sum((self.rows[i][k] * other.rows[k][j] for k in range(self.space_in.dim)), ZERO)
                for j in range(other.space_in.dim)
            ]
            for i in range(self.space_out.dim)
        ]
        return EvenLinearMap(other.space_in, self.space_out, rows)

    def __add__(self, other: "EvenLinearMap") -> "EvenLinearMap":
        return EvenLinearMap(
            self.space_in, self.space_out,
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)],
        )

    def __sub__(self, other: "EvenLinearMap") -> "EvenLinearMap":
        return EvenLinearMap(
            self.space_in, self.space_out,
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)],
        )

    def __neg__(self) -> "EvenLinearMap":
        return EvenLinearMap(self.space_in, self.space_out, [[-a for a in r] for r in self.rows])

    def scale(self, c) -> "EvenLinearMap":
        return EvenLinearMap(self.space_in, self.space_out, [[a * c for a in r] for r in self.rows])

    def power(self, k: int) -> "EvenLinearMap":
        if self.space_in.parities != self.space_out.parities:
            raise MalformedInputError("powers need an endomorphism")
        result = EvenLinearMap.identity(self.space_in)
        for _ in range(k):
            result = self.compose(result)
        return result

    def transpose(self) -> "EvenLinearMap":
        """Matrix transpose; on the dual basis this is the pull-back map."""
        rows = [[self.rows[j][i] for j in range(self.space_out.dim)] for i in range(self.space_in.dim)]
        return EvenLinearMap(self.space_out, self.space_in, rows)

    def inverse(self, name: str = "map") -> "EvenLinearMap":
        """Exact inverse by Gauss-Jordan elimination; raises SingularMapError."""
        if self.space_in.dim != self.space_out.dim:
            raise SingularMapError(name)
        n = self.space_in.dim
        aug = [list(self.rows[i]) + [ONE if i == j else ZERO for j in range(n)] for i in range(n)]
        for col in range(n):
            pivot = next((r for r in range(col, n) if aug[r][col]), None)
            if pivot is None:
                raise SingularMapError(name)
            aug[col], aug[pivot] = aug[pivot], aug[col]
            inv = ONE / aug[col][col]
            aug[col] = [x * inv for x in aug[col]]
            for r in range(n):
                if r != col and aug[r][col]:
                    f = aug[r][col]
                    aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
        return EvenLinearMap(self.space_out, self.space_in, [row[n:] for row in aug])

    def is_invertible(self) -> bool:
        try:
            self.inverse()
            return True
        except SingularMapError:
            return False

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return all(not c for row in self.rows for c in row)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, EvenLinearMap)
            and self.space_in.parities == other.space_in.parities
            and self.space_out.parities == other.space_out.parities
            and all(a == b for ra, rb in zip(self.rows, other.rows) for a, b in zip(ra, rb))
        )

    def __hash__(self):
        return hash((self.space_in.parities, self.space_out.parities,
                     tuple(tuple(str(c) for c in r) for r in self.rows)))

    def commutes_with(self, other: "EvenLinearMap") -> bool:
        return self.compose(other) == other.compose(self)


# ---------------------------------------------------------------------------
# canonical tuple enumeration
# ---------------------------------------------------------------------------

def all_tuples(dim: int, k: int) -> Iterator[Tuple[int, ...]]:
    return itertools.product(range(dim), repeat=k)


def canonical_tuples(space: GradedSpace, slots: int, skew_prefix_len: int) -> Iterator[Tuple[int, ...]]:
    """Tuples that can carry an independent coefficient: prefix non-decreasing,
    repeated even indices excluded from the prefix, free tail."""
    dim = space.dim
    tail = slots - skew_prefix_len
    for prefix in itertools.combinations_with_replacement(range(dim), skew_prefix_len):
        if any(prefix[i] == prefix[i + 1] and space.parities[prefix[i]] == 0 for i in range(len(prefix) - 1)):
            continue
        for rest in itertools.product(range(dim), repeat=tail):
            yield prefix + rest


# ---------------------------------------------------------------------------
# multilinear products (vector valued)
# ---------------------------------------------------------------------------

class MultiLinearProduct:
    """Arity-n structure-constant tensor with declared skew prefix.

    ``skew_prefix_len == arity`` means totally super-skew-symmetric,
    ``arity - 1`` the pre-Lie flavour, ``0`` no symmetry at all.  Entries are
    keyed by canonical tuples; values are sparse output vectors.  The product
    is even: an output coefficient at basis k may be nonzero only when
    ``parity(k)`` equals the parity of the input tuple.
    """

    __slots__ = ("space", "arity", "skew_prefix_len", "entries")

    def __init__(self, space: GradedSpace, arity: int, skew_prefix_len: int,
                 entries: Mapping[Tuple[int, ...], Mapping[int, object]],
                 allow_large: bool = False):
        if arity < 1:
            raise MalformedInputError("arity must be >= 1")
        if not (0 <= skew_prefix_len <= arity):
            raise MalformedInputError("skew prefix out of range")
        guard_scale(arity, space.dim, allow_large)
        self.space = space
        self.arity = arity
        self.skew_prefix_len = skew_prefix_len
        cleaned: Dict[Tuple[int, ...], Vec] = {}
        for idx, vec in entries.items():
            idx = tuple(idx)
            if len(idx) != arity:
                raise MalformedInputError(f"key {idx} has wrong arity (expected {arity})")
            key = canonical_skew_key(idx, space, skew_prefix_len)
            value = clean_vec({k: Q(0) + c for k, c in vec.items()})
            if not value:
                continue
            if key.zero:
                raise MalformedInputError(
                    f"entry at {idx} must vanish: repeated even index inside the skew prefix"
                )
            if key.indices != idx:
                raise MalformedInputError(f"entry key {idx} is not canonical (expected {key.indices})")
            p_in = tuple_parity(idx, space)
            for k in value:
                space.check_index(k)
                if space.parities[k] != p_in:
                    raise MalformedInputError(
                        f"evenness violated: entry {idx} -> e_{k} has parity "
                        f"{space.parities[k]}, tuple has parity {p_in}"
                    )
            cleaned[idx] = value
        self.entries = cleaned

    @classmethod
    def from_raw(cls, space: GradedSpace, arity: int, skew_prefix_len: int,
                 raw: Mapping[Tuple[int, ...], Mapping[int, object]],
                 allow_large: bool = False) -> "MultiLinearProduct":
        """Canonicalize a table keyed by arbitrary tuples.

        Duplicate keys mapping to the same canonical tuple must agree after
        sign adjustment; coefficients at zero-forced tuples must be zero.
        """
        canonical: Dict[Tuple[int, ...], Vec] = {}
        for idx, vec in raw.items():
            idx = tuple(idx)
            key = canonical_skew_key(idx, space, skew_prefix_len)
            value = clean_vec({k: Q(0) + c for k, c in vec.items()})
            if key.zero:
                if value:
                    raise MalformedInputError(
                        f"entry at {idx} must vanish (repeated even index in skew prefix)"
                    )
                continue
            adjusted = value if key.sign == 1 else vec_neg(value)
            if key.indices in canonical:
                if not vec_equal(canonical[key.indices], adjusted):
                    raise MalformedInputError(
                        f"inconsistent duplicate key {idx}: sign-adjusted value disagrees "
                        f"with canonical entry at {key.indices}"
                    )
            elif adjusted:
                canonical[key.indices] = adjusted
        return cls(space, arity, skew_prefix_len, canonical, allow_large=allow_large)

    @classmethod
    def build(cls, space: GradedSpace, arity: int, skew_prefix_len: int,
              fn: Callable[[Tuple[int, ...]], Vec], allow_large: bool = False) -> "MultiLinearProduct":
        """Evaluate ``fn`` on every canonical tuple and store the results."""
        entries = {}
        for idx in canonical_tuples(space, arity, skew_prefix_len):
            v = clean_vec(fn(idx))
            if v:
                entries[idx] = v
        return cls(space, arity, skew_prefix_len, entries, allow_large=allow_large)

    def evaluate_basis(self, idx: Sequence[int]) -> Vec:
        key = canonical_skew_key(idx, self.space, self.skew_prefix_len)
        if key.zero:
            return {}
        stored = self.entries.get(key.indices)
        if not stored:
            return {}
        return stored if key.sign == 1 else vec_neg(stored)

    def evaluate(self, args: Sequence[Vec]) -> Vec:
        """Multilinear extension to sparse vector arguments."""
        if len(args) != self.arity:
            raise MalformedInputError(f"expected {self.arity} arguments, got {len(args)}")
        out: Vec = {}
        for combo in itertools.product(*(a.items() for a in args)):
            coeff = ONE
            for _, c in combo:
                coeff = coeff * c
            term = self.evaluate_basis(tuple(i for i, _ in combo))
            if term:
                out = vec_add(out, vec_scale(term, coeff))
        return out

    def compose_output(self, f: EvenLinearMap) -> "MultiLinearProduct":
        """The product followed by ``f`` on the output."""
        return MultiLinearProduct(
            self.space, self.arity, self.skew_prefix_len,
            {idx: f.apply(vec) for idx, vec in self.entries.items()},
            allow_large=True,
        )

    def scale(self, c) -> "MultiLinearProduct":
        return MultiLinearProduct(
            self.space, self.arity, self.skew_prefix_len,
            {idx: vec_scale(vec, c) for idx, vec in self.entries.items()},
            allow_large=True,
        )

    def is_zero(self) -> bool:
        return not self.entries

    def items_sorted(self):
        return sorted(self.entries.items())

    def equal_coefficients(self, other: "MultiLinearProduct") -> bool:
        if self.arity != other.arity or self.space.parities != other.space.parities:
            return False
        keys = set(self.entries) | set(other.entries)
        return all(vec_equal(self.evaluate_basis(k), other.evaluate_basis(k)) for k in keys)


class RawProduct:
    """Uncanonicalized coefficient table with the MultiLinearProduct lookup
    interface; exists so skew checks can run on externally loaded raw data."""

    __slots__ = ("space", "arity", "skew_prefix_len", "table")

    def __init__(self, space: GradedSpace, arity: int, skew_prefix_len: int,
                 table: Mapping[Tuple[int, ...], Mapping[int, object]]):
        self.space = space
        self.arity = arity
        self.skew_prefix_len = skew_prefix_len
        self.table = {tuple(k): clean_vec({i: Q(0) + c for i, c in v.items()}) for k, v in table.items()}

    def evaluate_basis(self, idx: Sequence[int]) -> Vec:
        return self.table.get(tuple(idx), {})


# ---------------------------------------------------------------------------
# action tensors (operator valued)
# ---------------------------------------------------------------------------

class ActionTensor:
    """Multilinear map from algebra slots to operators on a module V.

    Entries are keyed by canonical algebra tuples; each value is a sparse
    matrix ``{v_in: output vector}``.  Evenness: the output parity equals the
    tuple parity plus the input parity.

    The stored matrices are plain coefficient tables.  Whether an application
    to a module element picks up the Koszul crossing factor is the caller's
    choice: ``apply`` is the plain action (module slot conceptually *after*
    the algebra slots, as for left multiplications and Lie-type actions),
    ``apply_graded`` multiplies by ``(-1)^{p(v) * p(args)}`` (module slot
    conceptually *first*, as for right multiplications).
    """

    __slots__ = ("space_alg", "space_v", "slots", "skew_prefix_len", "entries")

    def __init__(self, space_alg: GradedSpace, space_v: GradedSpace, slots: int,
                 skew_prefix_len: int, entries: Mapping[Tuple[int, ...], Mapping[int, Mapping[int, object]]],
                 allow_large: bool = False):
        if slots < 0:
            raise MalformedInputError("need slots >= 0")
        if not (0 <= skew_prefix_len <= slots):
            raise MalformedInputError("skew prefix out of range")
        guard_scale(max(slots, 1), max(space_alg.dim, space_v.dim), allow_large)
        self.space_alg = space_alg
        self.space_v = space_v
        self.slots = slots
        self.skew_prefix_len = skew_prefix_len
        cleaned: Dict[Tuple[int, ...], Dict[int, Vec]] = {}
        for idx, mat in entries.items():
            idx = tuple(idx)
            if len(idx) != slots:
                raise MalformedInputError(f"key {idx} has wrong slot count (expected {slots})")
            key = canonical_skew_key(idx, space_alg, skew_prefix_len)
            cmat: Dict[int, Vec] = {}
            p_args = tuple_parity(idx, space_alg)
            for v_in, col in mat.items():
                space_v.check_index(v_in)
                col = clean_vec({k: Q(0) + c for k, c in col.items()})
                if not col:
                    continue
                for v_out in col:
                    space_v.check_index(v_out)
                    if space_v.parities[v_out] != (p_args ^ space_v.parities[v_in]):
                        raise MalformedInputError(
                            f"evenness violated: action at {idx}, e_{v_in} -> e_{v_out}"
                        )
                cmat[v_in] = col
            if not cmat:
                continue
            if key.zero:
                raise MalformedInputError(
                    f"action entry at {idx} must vanish (repeated even index in skew prefix)"
                )
            if key.indices != idx:
                raise MalformedInputError(f"action key {idx} is not canonical (expected {key.indices})")
            cleaned[idx] = cmat
        self.entries = cleaned

    @classmethod
    def build(cls, space_alg: GradedSpace, space_v: GradedSpace, slots: int, skew_prefix_len: int,
              fn: Callable[[Tuple[int, ...], int], Vec], allow_large: bool = False) -> "ActionTensor":
        entries: Dict[Tuple[int, ...], Dict[int, Vec]] = {}
        for idx in canonical_tuples(space_alg, slots, skew_prefix_len):
            mat: Dict[int, Vec] = {}
            for v_in in range(space_v.dim):
                col = clean_vec(fn(idx, v_in))
                if col:
                    mat[v_in] = col
            if mat:
                entries[idx] = mat
        return cls(space_alg, space_v, slots, skew_prefix_len, entries, allow_large=allow_large)

    @classmethod
    def zero(cls, space_alg: GradedSpace, space_v: GradedSpace, slots: int,
             skew_prefix_len: int) -> "ActionTensor":
        return cls(space_alg, space_v, slots, skew_prefix_len, {}, allow_large=True)

    @classmethod
    def from_raw(cls, space_alg: GradedSpace, space_v: GradedSpace, slots: int, skew_prefix_len: int,
                 raw: Mapping[Tuple[int, ...], Mapping[int, Mapping[int, object]]],
                 allow_large: bool = False) -> "ActionTensor":
        canonical: Dict[Tuple[int, ...], Dict[int, Vec]] = {}
        for idx, mat in raw.items():
            idx = tuple(idx)
            key = canonical_skew_key(idx, space_alg, skew_prefix_len)
            cmat = {v: clean_vec({k: Q(0) + c for k, c in col.items()}) for v, col in mat.items()}
            cmat = {v: col for v, col in cmat.items() if col}
            if key.zero:
                if cmat:
                    raise MalformedInputError(
                        f"action entry at {idx} must vanish (repeated even index in skew prefix)"
                    )
                continue
            if key.sign == -1:
                cmat = {v: vec_neg(col) for v, col in cmat.items()}
            if key.indices in canonical:
                prev = canonical[key.indices]
                same = set(prev) == set(cmat) and all(vec_equal(prev[v], cmat[v]) for v in prev)
                if not same:
                    raise MalformedInputError(
                        f"inconsistent duplicate action key {idx} (canonical {key.indices})"
                    )
            elif cmat:
                canonical[key.indices] = cmat
        return cls(space_alg, space_v, slots, skew_prefix_len, canonical, allow_large=allow_large)

    # -- evaluation --------------------------------------------------------

    def matrix_basis(self, idx: Sequence[int]) -> Dict[int, Vec]:
        key = canonical_skew_key(idx, self.space_alg, self.skew_prefix_len)
        if key.zero:
            return {}
        mat = self.entries.get(key.indices)
        if not mat:
            return {}
        if key.sign == 1:
            return mat
        return {v: vec_neg(col) for v, col in mat.items()}

    def operator(self, args: Sequence[Vec]) -> Dict[int, Vec]:
        """Expand vector-valued algebra arguments into one sparse matrix."""
        if len(args) != self.slots:
            raise MalformedInputError(f"expected {self.slots} arguments, got {len(args)}")
        out: Dict[int, Vec] = {}
        for combo in itertools.product(*(a.items() for a in args)):
            coeff = ONE
            for _, c in combo:
                coeff = coeff * c
            mat = self.matrix_basis(tuple(i for i, _ in combo))
            for v_in, col in mat.items():
                out[v_in] = vec_add(out.get(v_in, {}), vec_scale(col, coeff))
        return {v: col for v, col in out.items() if col}

    def apply(self, args: Sequence[Vec], w: Vec) -> Vec:
        """Plain action on a module vector."""
        mat = self.operator(args)
        out: Vec = {}
        for j, c in w.items():
            col = mat.get(j)
            if col:
                out = vec_add(out, vec_scale(col, c))
        return out

    def apply_graded(self, args: Sequence[Vec], args_parity: int, w: Vec, w_parity: int) -> Vec:
        """Action with the Koszul crossing factor ``(-1)^{p(w) p(args)}``.

        Used for right-multiplication-type tensors, whose module argument
        conceptually occupies the first product slot and therefore crosses
        all algebra arguments.
        """
        out = self.apply(args, w)
        if args_parity and w_parity:
            out = vec_neg(out)
        return out

    def to_even_map(self, args: Sequence[Vec]) -> EvenLinearMap:
        """Materialize the operator at (necessarily even-total-parity) args."""
        mat = self.operator(args)
        entries = {(i, j): c for j, col in mat.items() for i, c in col.items()}
        return EvenLinearMap.from_entries(self.space_v, self.space_v, entries)

    def compose_output(self, f: EvenLinearMap) -> "ActionTensor":
        return ActionTensor(
            self.space_alg, self.space_v, self.slots, self.skew_prefix_len,
            {idx: {v: f.apply(col) for v, col in mat.items()} for idx, mat in self.entries.items()},
            allow_large=True,
        )

    def is_zero(self) -> bool:
        return not self.entries

    def equal_coefficients(self, other: "ActionTensor") -> bool:
        if (self.slots, self.space_alg.parities, self.space_v.parities) != (
            other.slots, other.space_alg.parities, other.space_v.parities
        ):
            return False
        keys = set(self.entries) | set(other.entries)
        for k in keys:
            a, b = self.matrix_basis(k), other.matrix_basis(k)
            for v in set(a) | set(b):
                if not vec_equal(a.get(v, {}), b.get(v, {})):
                    return False
        return True
