"""Generators, denumerants and p-Apery sets."""

from .generators import Generators, validate_generators
from .denumerant import DenumerantTable, denumerant, denumerant_table, denumerant_series, is_in_Sp
from .apery import PAperySet, apery_set, initial_scan_bound

__all__ = [
    "Generators",
    "validate_generators",
    "DenumerantTable",
    "denumerant",
    "denumerant_table",
    "denumerant_series",
    "is_in_Sp",
    "PAperySet",
    "apery_set",
    "initial_scan_bound",
]
