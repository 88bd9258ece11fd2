"""Exception types shared across the package."""

from __future__ import annotations


class HomnaryError(Exception):
    """Base class for all package errors."""


class MalformedInputError(HomnaryError, ValueError):
    """Structurally invalid data: bad rationals, parity violations,
    inconsistent duplicate keys, shape mismatches, unknown fields."""


class PreconditionError(HomnaryError, RuntimeError):
    """A construction's stated precondition failed.

    When the failure is a checkable identity, ``report`` carries the
    residual report naming the witnesses.
    """

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class SingularMapError(PreconditionError):
    """A map required to be invertible is singular; ``name`` says which."""

    def __init__(self, name: str):
        super().__init__(f"map {name!r} is singular but must be invertible")
        self.name = name
