"""Exception hierarchy for audit failures.

Every error is a ``ValueError`` subclass so callers that only care about
"bad data" can catch one type.
"""

from __future__ import annotations


class AuditError(ValueError):
    """Base class for all data and configuration errors raised by justaudit."""


class EmptyInputError(AuditError):
    pass


class DuplicateIdError(AuditError):
    pass


class NonFiniteUtilityError(AuditError):
    pass


class EmptyAfterFilterError(AuditError):
    pass


class NegativeValuesError(AuditError):
    pass


class ZeroMeanError(AuditError):
    pass


class NonPositiveMinimumError(AuditError):
    pass


class NonPositiveValuesError(AuditError):
    pass


class InvalidFractionError(AuditError):
    pass


class OptimizationTypeTheoryError(AuditError):
    pass


class EmptyGroupError(AuditError):
    pass


class NoFeasibleCandidateError(AuditError):
    pass


class MissingHeaderError(AuditError):
    pass


class BadRowError(AuditError):
    """A CSV row failed validation. ``row`` is 1-based and counts the header."""

    def __init__(self, row: int, reason: str) -> None:
        super().__init__(f"row {row}: {reason}")
        self.row = row
        self.reason = reason


class CandidateError(AuditError):
    """Wraps an error raised while scoring a named candidate."""

    def __init__(self, name: str, cause: Exception) -> None:
        super().__init__(f"candidate {name!r}: {cause}")
        self.name = name
        self.cause = cause
