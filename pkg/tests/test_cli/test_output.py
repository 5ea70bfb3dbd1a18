"""Tests for result renderers."""

import json

import pytest

from src.cli import render, render_csv, render_json, render_plain
from src.core import Command, CommandResult, OutputFormat, UsageError


@pytest.fixture
def genus_result():
    return CommandResult(Command.GENUS, {"generators": [5, 7, 11], "p": 4, "genus": "48"})


@pytest.fixture
def complement_result():
    fields = {"generators": [2, 3], "p": 0, "complement": ["1"]}
    return CommandResult(Command.COMPLEMENT, fields, rows=[["n"], ["1"]])


def test_json_is_compact_and_ordered(genus_result):
    assert render_json(genus_result) == '{"generators": [5, 7, 11], "p": 4, "genus": "48"}'


def test_json_indent(genus_result):
    assert json.loads(render_json(genus_result, indent=2)) == genus_result.to_dict()
    assert "\n" in render_json(genus_result, indent=2)


def test_csv(complement_result):
    assert render_csv(complement_result) == "n\n1"


def test_csv_needs_rows(genus_result):
    with pytest.raises(UsageError):
        render_csv(genus_result)


def test_plain(genus_result):
    assert render_plain(genus_result) == "generators: 5,7,11\np: 4\ngenus: 48"


def test_plain_nested_values():
    result = CommandResult(Command.WEIGHTED_SUM, {
        "lambda": {"modulus": [1, 0, 1], "coeffs": ["0/1", "1/1"]},
        "all_match": True,
    })
    assert render_plain(result) == 'lambda: {"modulus": [1, 0, 1], "coeffs": ["0/1", "1/1"]}\nall_match: true'


def test_dispatch(genus_result):
    assert render(genus_result, OutputFormat.PLAIN) == render_plain(genus_result)
    assert render(genus_result, "json") == render_json(genus_result)
