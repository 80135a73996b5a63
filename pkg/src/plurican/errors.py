"""Error types shared across the package.

The CLI maps these onto exit codes: any :class:`DomainError` is exit 1,
except :class:`MalformedInputError` which is exit 2.
"""

from __future__ import annotations


class DomainError(ValueError):
    """Input violates a documented mathematical rule of some operation."""

    kind = "domain-error"

    def __init__(self, message: str, **details):
        super().__init__(message)
        self.details = details

    def as_json(self) -> dict:
        out: dict = {"kind": self.kind, "message": str(self)}
        if self.details:
            out["details"] = self.details
        return out


class ValidationError(DomainError):
    """A domain object is inconsistent: wrong size, duplicates, mismatched
    dimensions, non-invertible matrix, non-integral invariant, and so on."""

    kind = "validation"


class HypothesisError(DomainError):
    """A stated hypothesis of the requested criterion does not hold."""

    kind = "hypothesis-violation"


class MalformedInputError(DomainError):
    """Input file or value cannot be parsed against its documented schema."""

    kind = "malformed-input"
