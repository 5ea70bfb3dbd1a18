"""Closed-form evaluations over p-numerical semigroups."""

from .power_sums import PowerSumRequest, power_sum, frobenius, genus, sylvester_sum, resolve_apery
from .weighted_sums import (
    WeightedSumRequest,
    weighted_power_sum,
    weighted_sum_mu1,
    weighted_sum_lambda_root,
    alternating_sum,
    lambda_power_is_one,
)
from .two_generator import TwoGeneratorValues, two_gen_closed, classical_two_gen, weighted_two_gen

__all__ = [
    "PowerSumRequest",
    "power_sum",
    "frobenius",
    "genus",
    "sylvester_sum",
    "resolve_apery",
    "WeightedSumRequest",
    "weighted_power_sum",
    "weighted_sum_mu1",
    "weighted_sum_lambda_root",
    "alternating_sum",
    "lambda_power_is_one",
    "TwoGeneratorValues",
    "two_gen_closed",
    "classical_two_gen",
    "weighted_two_gen",
]
