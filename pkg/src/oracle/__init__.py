"""Brute-force ground truth and formula verification."""

from .complement import (
    ComplementSet,
    complement_set,
    brute_power_sum,
    brute_weighted_sum,
    brute_frobenius,
    brute_genus,
    brute_sylvester_sum,
    brute_alternating_sum,
)
from .verification import VerificationCheck, VerificationReport, verify

__all__ = [
    "ComplementSet",
    "complement_set",
    "brute_power_sum",
    "brute_weighted_sum",
    "brute_frobenius",
    "brute_genus",
    "brute_sylvester_sum",
    "brute_alternating_sum",
    "VerificationCheck",
    "VerificationReport",
    "verify",
]
