"""Exact rational scalars with a backend selected at import time.

Every coefficient in the package is an exact rational; there is no floating
point anywhere, so every checker verdict is "residual identically zero"
rather than a tolerance call.  Two interchangeable backends supply the
arithmetic:

* ``gmpy2.mpq`` (GMP-backed), used by default when importable;
* ``fractions.Fraction`` from the standard library.

Set ``HOMNARY_SCALAR=fraction`` or ``HOMNARY_SCALAR=gmpy2`` to force one.
``benchmarks/bench_scalars.py`` times the same verification workload under
both.  Serialized output is identical either way: rationals print as ``p/q``
in lowest terms, or plain ``p`` for integers.
"""

from __future__ import annotations

import os
import re
from fractions import Fraction

from .errors import MalformedInputError

_requested = os.environ.get("HOMNARY_SCALAR", "auto").strip().lower()

if _requested in ("auto", "gmpy2", ""):
    try:
        from gmpy2 import mpq as _mpq

        BACKEND = "gmpy2"
    except ImportError:
        if _requested == "gmpy2":
            raise
        _mpq = None
        BACKEND = "fraction"
elif _requested == "fraction":
    _mpq = None
    BACKEND = "fraction"
else:
    raise RuntimeError(f"HOMNARY_SCALAR={_requested!r}: expected 'gmpy2', 'fraction' or 'auto'")

if BACKEND == "gmpy2":

    def Q(num: int = 0, den: int = 1):
        """Exact rational num/den."""
        return _mpq(num, den)

else:

    def Q(num: int = 0, den: int = 1):
        """Exact rational num/den."""
        return Fraction(num, den)


ZERO = Q(0)
ONE = Q(1)
MINUS_ONE = Q(-1)

_RATIONAL_RE = re.compile(r"^([+-]?\d+)(?:/(\d+))$|^([+-]?\d+)$")


def rat_from_string(text: str):
    """Parse 'p', '-p' or 'p/q' into an exact rational.

    Rejects anything else (floats, empty strings, signed denominators,
    zero denominators) with `MalformedInputError`.
    """
    if not isinstance(text, str):
        raise MalformedInputError(f"rational must be a string, got {type(text).__name__}")
    m = _RATIONAL_RE.match(text.strip())
    if not m:
        raise MalformedInputError(f"malformed rational {text!r}")
    if m.group(3) is not None:
        return Q(int(m.group(3)))
    num, den = int(m.group(1)), int(m.group(2))
    if den == 0:
        raise MalformedInputError(f"zero denominator in rational {text!r}")
    return Q(num, den)


def rat_to_string(x) -> str:
    """Canonical text form: 'p/q' in lowest terms, 'p' when q == 1."""
    num, den = x.numerator, x.denominator
    if den == 1:
        return str(num)
    return f"{num}/{den}"
