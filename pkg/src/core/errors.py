"""Exception hierarchy for the p-Frobenius toolkit.

Every error raised by the library derives from PFrobeniusError. The CLI
maps each class to a process exit code through exit_code_for().
"""

from typing import Any


class PFrobeniusError(Exception):
    """Base class for all library errors.

    Attributes:
        context: Structured details about the failing input (generators, p, λ, ...)
        cause: Underlying exception, if any
    """

    exit_code = 3

    def __init__(self, message: str, context: dict[str, Any] | None = None, cause: Exception | None = None):
        self.context = context or {}
        self.cause = cause
        super().__init__(message)


class DomainError(PFrobeniusError, ValueError):
    """An argument lies outside the domain of the operation."""


class CoprimalityError(DomainError):
    """The generators are not coprime."""


class ModulusMismatchError(DomainError):
    """Two number-field elements live in different fields."""


class PreconditionError(DomainError):
    """A theorem's hypothesis does not hold for the given input.

    Attributes:
        alternative: Name of the operation that covers the excluded case
    """

    def __init__(self, message: str, alternative: str | None = None, **kwargs: Any):
        self.alternative = alternative
        if alternative:
            message = f"{message} (use {alternative} instead)"
        super().__init__(message, **kwargs)


class NumberFieldZeroDivisionError(PFrobeniusError, ZeroDivisionError):
    """Division by the zero element of a number field."""


class ZeroDivisorError(NumberFieldZeroDivisionError):
    """A nonzero element has no inverse: the modulus is not irreducible."""


class ConsistencyError(PFrobeniusError, ArithmeticError):
    """An internal identity failed (e.g. a non-integer where an integer is required)."""

    exit_code = 4


class UsageError(PFrobeniusError):
    """Malformed command-line input."""

    exit_code = 2


def exit_code_for(exc: BaseException) -> int:
    """Map an exception to a CLI exit code (1 is reserved for verify mismatches)."""
    if isinstance(exc, PFrobeniusError):
        return exc.exit_code
    return 4
