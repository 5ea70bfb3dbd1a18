"""Core components: errors and shared result types."""

from .errors import (
    PFrobeniusError,
    DomainError,
    CoprimalityError,
    ModulusMismatchError,
    PreconditionError,
    NumberFieldZeroDivisionError,
    ZeroDivisorError,
    ConsistencyError,
    UsageError,
    exit_code_for,
)
from .types import Command, OutputFormat, CommandResult

__all__ = [
    "PFrobeniusError",
    "DomainError",
    "CoprimalityError",
    "ModulusMismatchError",
    "PreconditionError",
    "NumberFieldZeroDivisionError",
    "ZeroDivisorError",
    "ConsistencyError",
    "UsageError",
    "exit_code_for",
    "Command",
    "OutputFormat",
    "CommandResult",
]
