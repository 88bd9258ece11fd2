"""Parity bookkeeping, Koszul signs, and canonical skew-symmetric index keys.

Sign conventions, fixed once here and used verbatim everywhere else:

* A permutation is a tuple ``sigma`` acting by ``new[k] = old[sigma[k]]``.
* ``koszul_sign`` returns only the graded commutation factor: the product of
  ``(-1)^{p_a p_b}`` over the pairs that cross.  The plain permutation parity
  ``(-1)^{inversions}`` is a separate factor (``perm_sign``); callers that
  implement skew rules multiply the two themselves.  Keeping them apart makes
  each identity transcription auditable sign by sign.
* Swapping two adjacent slots of a super-skew product multiplies the value by
  ``-(-1)^{p_a p_b}``.  A repeated index of even parity inside a skew prefix
  forces the coefficient to zero; a repeated odd index does not (the swap
  factor ``-(-1)^{1*1}`` is ``+1`` and constrains nothing).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import MalformedInputError


@dataclass(frozen=True)
class GradedSpace:
    """A finite homogeneous basis; ``parities[i]`` is the Z2-degree of e_i."""

    parities: tuple[int, ...]

    def __post_init__(self):
        if len(self.parities) < 1:
            raise MalformedInputError("graded space needs dimension >= 1")
        if any(p not in (0, 1) for p in self.parities):
            raise MalformedInputError("parities must be 0 or 1")

    @property
    def dim(self) -> int:
        return len(self.parities)

    def parity(self, index: int) -> int:
        return self.parities[index]

    def check_index(self, index: int) -> None:
        if not (0 <= index < self.dim):
            raise MalformedInputError(f"basis index {index} out of range for dim {self.dim}")

    @staticmethod
    def concat(a: "GradedSpace", b: "GradedSpace") -> "GradedSpace":
        return GradedSpace(a.parities + b.parities)


def _check_permutation(perm: Sequence[int], size: int) -> None:
    if sorted(perm) != list(range(size)):
        raise MalformedInputError(f"{tuple(perm)} is not a permutation of 0..{size - 1}")


def perm_sign(perm: Sequence[int]) -> int:
    """(-1)^{inversions} of the permutation."""
    _check_permutation(perm, len(perm))
    sign = 1
    for a in range(len(perm)):
        for b in range(a + 1, len(perm)):
            if perm[a] > perm[b]:
                sign = -sign
    return sign


def koszul_sign(perm: Sequence[int], parities: Sequence[int]) -> int:
    """Graded commutation factor of reordering homogeneous elements.

    For every inversion pair (elements originally at positions i < j that end
    up in the opposite order) the factor picks up ``(-1)^{p_i p_j}``.  The
    permutation parity itself is *not* included.
    """
    _check_permutation(perm, len(parities))
    sign = 1
    for a in range(len(perm)):
        for b in range(a + 1, len(perm)):
            if perm[a] > perm[b] and parities[perm[a]] and parities[perm[b]]:
                sign = -sign
    return sign


def tuple_parity(indices: Iterable[int], space: GradedSpace) -> int:
    """Mod-2 sum of the parities of the indexed basis vectors."""
    total = 0
    for i in indices:
        space.check_index(i)
        total ^= space.parities[i]
    return total


@dataclass(frozen=True)
class IndexTupleKey:
    """Canonical storage key for a (partially) super-skew index tuple.

    ``value(original) == sign * value(indices)`` for any product that is
    super-skew-symmetric on the sorted prefix; ``zero`` means the coefficient
    is forced to vanish (repeated even index inside the prefix).
    """

    indices: tuple[int, ...]
    sign: int
    zero: bool


def canonical_skew_key(indices: Sequence[int], space: GradedSpace, skew_prefix_len: int) -> IndexTupleKey:
    """Stable-sort the first ``skew_prefix_len`` indices, accumulating the sign.

    Each adjacent transposition of entries a, b contributes the full skew
    factor ``-(-1)^{p_a p_b}``.
    """
    idx = list(indices)
    for i in idx:
        space.check_index(i)
    if skew_prefix_len > len(idx):
        raise MalformedInputError(
            f"skew prefix {skew_prefix_len} longer than tuple of length {len(idx)}"
        )
    sign = 1
    prefix = idx[:skew_prefix_len]
    # insertion sort; stability keeps repeated indices in place, so the sign
    # of a tuple with repeated odd indices is well defined
    for i in range(1, len(prefix)):
        j = i
        while j > 0 and prefix[j - 1] > prefix[j]:
            a, b = prefix[j - 1], prefix[j]
            sign = -sign
            if space.parities[a] and space.parities[b]:
                sign = -sign
            prefix[j - 1], prefix[j] = b, a
            j -= 1
    zero = any(
        prefix[k] == prefix[k + 1] and space.parities[prefix[k]] == 0
        for k in range(len(prefix) - 1)
    )
    return IndexTupleKey(tuple(prefix) + tuple(idx[skew_prefix_len:]), sign, zero)
