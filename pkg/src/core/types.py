"""Core type definitions shared by the CLI front-end.

This module defines:
- Command: the CLI sub-commands
- OutputFormat: supported renderings of a result
- CommandResult: one command's serialisable outcome
"""

from dataclasses import dataclass
from enum import Enum
from typing import Any


class Command(str, Enum):
    """CLI sub-commands."""
    APERY = "apery"
    FROBENIUS = "frobenius"
    GENUS = "genus"
    SYLVESTER_SUM = "sylvester-sum"
    POWER_SUM = "power-sum"
    WEIGHTED_SUM = "weighted-sum"
    ALTERNATING_SUM = "alternating-sum"
    COMPLEMENT = "complement"
    TABLE = "table"
    VERIFY = "verify"


class OutputFormat(str, Enum):
    """Renderings of a CommandResult."""
    JSON = "json"
    CSV = "csv"
    PLAIN = "plain"


@dataclass
class CommandResult:
    """Outcome of one CLI command.

    Attributes:
        command: The command that produced the result
        fields: Ordered result fields, already wire-encoded (strings, lists, dicts)
        rows: Optional CSV rows (header first) for table/complement
        exit_code: Process exit status (0, or 1 for a failed verify)
    """
    command: Command
    fields: dict[str, Any]
    rows: list[list[str]] | None = None
    exit_code: int = 0

    def __post_init__(self):
        """Convert command if given as a string."""
        if isinstance(self.command, str):
            self.command = Command(self.command)

    def to_dict(self) -> dict[str, Any]:
        """The JSON object printed on standard output."""
        return dict(self.fields)
