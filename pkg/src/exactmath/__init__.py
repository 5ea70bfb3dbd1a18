"""Exact arithmetic: rationals, Bernoulli and Eulerian numbers, number fields."""

import logging

from .rational import Rational, format_rational, format_integer, parse_rational, require_integer
from .bernoulli import BernoulliCache, bernoulli, bernoulli_cache
from .eulerian import (
    EulerianCache,
    eulerian,
    eulerian_cache,
    eulerian_polynomial,
    eulerian_closed_form,
    power_series_partial_sum,
)
from .codec import serialize_value
from .number_field import (
    NumberFieldElement,
    SCALAR_MODULUS,
    GAUSSIAN_MODULUS,
    CUBE_ROOT_TWO_MODULUS,
    nf_add,
    nf_sub,
    nf_mul,
    nf_inv,
    nf_pow,
    element,
    coerce,
    rational_element,
    as_element,
    one,
    zero,
    generator,
    gaussian,
    cyclotomic_modulus,
    primitive_root_of_unity,
)

logger = logging.getLogger(__name__)


def warm_caches(bernoulli_upto: int, eulerian_upto: int) -> None:
    """Precompute the shared caches so later concurrent reads never extend them."""
    bernoulli_cache().extend(bernoulli_upto)
    eulerian_cache().extend(eulerian_upto)
    logger.debug(f"Caches warmed: B_0..B_{bernoulli_upto}, Eulerian rows 0..{eulerian_upto}")


__all__ = [
    "Rational",
    "format_rational",
    "format_integer",
    "parse_rational",
    "require_integer",
    "BernoulliCache",
    "bernoulli",
    "bernoulli_cache",
    "EulerianCache",
    "eulerian",
    "eulerian_cache",
    "eulerian_polynomial",
    "eulerian_closed_form",
    "power_series_partial_sum",
    "NumberFieldElement",
    "SCALAR_MODULUS",
    "GAUSSIAN_MODULUS",
    "CUBE_ROOT_TWO_MODULUS",
    "nf_add",
    "nf_sub",
    "nf_mul",
    "nf_inv",
    "nf_pow",
    "element",
    "coerce",
    "rational_element",
    "as_element",
    "one",
    "zero",
    "generator",
    "gaussian",
    "cyclotomic_modulus",
    "primitive_root_of_unity",
    "serialize_value",
    "warm_caches",
]
