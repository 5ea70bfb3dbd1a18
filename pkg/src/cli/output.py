"""Renderers for command results: JSON, CSV and plain text."""

import csv
import io
import json
from typing import Any

from ..core.errors import UsageError
from ..core.types import CommandResult, OutputFormat


def render_json(result: CommandResult, indent: int | None = None) -> str:
    return json.dumps(result.to_dict(), indent=indent)


def render_csv(result: CommandResult) -> str:
    """CSV rows, header first; only table and complement produce rows."""
    if result.rows is None:
        raise UsageError(f"csv output is only available for table and complement, not {result.command.value}")
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerows(result.rows)
    return buffer.getvalue().rstrip("\n")


def _plain_value(value: Any) -> str:
    if isinstance(value, list):
        return ",".join(_plain_value(v) if not isinstance(v, dict) else json.dumps(v) for v in value)
    if isinstance(value, dict):
        return json.dumps(value)
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def render_plain(result: CommandResult) -> str:
    """One "key: value" line per field."""
    return "\n".join(f"{key}: {_plain_value(value)}" for key, value in result.to_dict().items())


def render(result: CommandResult, fmt: OutputFormat | str, indent: int | None = None) -> str:
    fmt = OutputFormat(fmt)
    if fmt is OutputFormat.JSON:
        return render_json(result, indent)
    if fmt is OutputFormat.CSV:
        return render_csv(result)
    return render_plain(result)
