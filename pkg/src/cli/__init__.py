"""Command-line front-end."""

from .commands import CommandContext, build_parser, run
from .lambda_spec import parse_lambda
from .output import render, render_csv, render_json, render_plain

__all__ = [
    "CommandContext",
    "build_parser",
    "run",
    "parse_lambda",
    "render",
    "render_csv",
    "render_json",
    "render_plain",
]
