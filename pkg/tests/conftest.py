"""Shared pytest fixtures and Hypothesis strategies for pfrobenius tests."""

from fractions import Fraction
from functools import reduce
from math import gcd

import pytest
from hypothesis import strategies as st

from src.exactmath import CUBE_ROOT_TWO_MODULUS, cyclotomic_modulus, element, gaussian, rational_element
from src.semigroup import validate_generators

# ============================================================================
# Hypothesis Strategies for Property-Based Testing
# ============================================================================

# Representation thresholds
p_strategy = st.integers(min_value=0, max_value=4)

# Power-sum exponents
mu_strategy = st.integers(min_value=0, max_value=6)
positive_mu_strategy = st.integers(min_value=1, max_value=4)

# Small rationals, never 0 or 1 (valid weights)
weight_strategy = st.fractions(min_value=-3, max_value=3, max_denominator=4).filter(
    lambda q: q not in (0, 1)
)

# Moduli with known irreducibility
irreducible_modulus_strategy = st.sampled_from([
    (1, 0, 1),           # x^2 + 1
    (-2, 0, 0, 1),       # x^3 - 2
    (1, 1, 1),           # x^2 + x + 1
    (1, 1, 1, 1, 1),     # x^4 + x^3 + x^2 + x + 1
    (-3, 0, 1),          # x^2 - 3
])

small_rational_strategy = st.fractions(min_value=-5, max_value=5, max_denominator=6)

# Full randomized ranges for formula-versus-oracle equivalence
wide_p_strategy = st.integers(min_value=0, max_value=6)
wide_mu_strategy = st.integers(min_value=0, max_value=5)
oracle_weight_strategy = st.sampled_from([
    rational_element(2),
    rational_element(Fraction(-1, 2)),
    rational_element(Fraction(3, 5)),
    gaussian(1, 1),
])


# ============================================================================
# Composite Strategies
# ============================================================================

@st.composite
def generators_strategy(draw, min_k=2, max_k=3, max_value=12):
    """Generate validated coprime generator tuples."""
    values = draw(
        st.lists(st.integers(min_value=2, max_value=max_value), min_size=min_k, max_size=max_k, unique=True)
        .filter(lambda vs: reduce(gcd, vs) == 1)
    )
    return validate_generators(values)


def wide_generators_strategy():
    """Coprime generator sets with k in {2, 3, 4} and every a_i <= 15."""
    return generators_strategy(min_k=2, max_k=4, max_value=15)


@st.composite
def coprime_pair_strategy(draw, max_value=30):
    """Generate coprime pairs 2 <= a < b <= max_value."""
    a = draw(st.integers(min_value=2, max_value=max_value - 1))
    b = draw(st.integers(min_value=a + 1, max_value=max_value).filter(lambda b: gcd(a, b) == 1))
    return a, b


@st.composite
def field_element_strategy(draw, modulus=None):
    """Generate elements of one of the test number fields."""
    modulus = modulus if modulus is not None else draw(irreducible_modulus_strategy)
    coeffs = draw(st.lists(small_rational_strategy, min_size=len(modulus) - 1, max_size=len(modulus) - 1))
    return element(modulus, coeffs)


@st.composite
def nonzero_field_element_strategy(draw, modulus=None):
    return draw(field_element_strategy(modulus).filter(lambda e: not e.is_zero()))


# ============================================================================
# Pytest Fixtures
# ============================================================================

# d(n; 5, 7, 11) for n = 0..100
TABLE_5_7_11 = (
    1,
    0, 0, 0, 0, 1, 0, 1, 0, 0, 1, 1, 1, 0, 1, 1, 1, 1, 1, 1, 1,
    2, 2, 1, 1, 2, 2, 2, 2, 2, 2, 2, 3, 3, 2, 3, 3, 3, 3, 3, 4,
    3, 4, 4, 4, 4, 4, 5, 4, 5, 5, 5, 5, 5, 6, 6, 6, 6, 6, 6, 7,
    7, 7, 7, 7, 8, 8, 8, 8, 8, 9, 9, 9, 9, 9, 10, 10, 11, 10, 10, 11,
    11, 12, 11, 12, 12, 12, 13, 13, 13, 13, 14, 14, 14, 14, 15, 15, 15, 16, 16, 16,
)

# Gaps of <14, 17, 20, 23, 26, 29>
GAPS_14_29 = (
    1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 15, 16, 18, 19, 21, 22, 24, 25, 27,
    30, 32, 33, 35, 36, 38, 39, 41, 44, 47, 50, 53, 61, 64, 67,
)

# sum of zeta_5^n n over d(n; 7, 5) <= p, as (const, zeta, zeta^2, zeta^3, zeta^4)
ZETA5_SUMS_7_5 = {
    0: (0, 34, 2, 65, 13),
    1: (105, 286, 156, 366, 216),
    2: (455, 783, 555, 912, 664),
    3: (1050, 1525, 1199, 1703, 1357),
    4: (1890, 2512, 2088, 2739, 2295),
    5: (2975, 3744, 3222, 4020, 3478),
}


@pytest.fixture
def table_5_7_11():
    return TABLE_5_7_11


@pytest.fixture
def gens_5_7_11():
    return validate_generators([5, 7, 11])


@pytest.fixture
def gens_14_29():
    return validate_generators([14, 17, 20, 23, 26, 29])


@pytest.fixture
def gaps_14_29():
    return GAPS_14_29


@pytest.fixture
def zeta5():
    """zeta_5 in Q[x]/(x^4 + x^3 + x^2 + x + 1)."""
    return element(cyclotomic_modulus(5), [0, 1])


@pytest.fixture
def zeta5_sums_7_5():
    """Expected two-generator zeta_5 sums keyed by p, as field elements."""
    modulus = cyclotomic_modulus(5)
    return {p: element(modulus, coeffs) for p, coeffs in ZETA5_SUMS_7_5.items()}


@pytest.fixture
def cube_root_two():
    return element(CUBE_ROOT_TWO_MODULUS, [0, 1])


@pytest.fixture
def weighted_golden_cases(cube_root_two):
    """(mu, lambda, expected) for <14, 17, ..., 29> at p = 0."""
    return [
        (2, cube_root_two, element(CUBE_ROOT_TWO_MODULUS, [21528522, 31320173525, 659369214])),
        (
            3,
            rational_element(7),
            rational_element(126153136547718860397749189364814847897329040723302499959511892),
        ),
        (
            4,
            rational_element(Fraction(-1, 2)),
            rational_element(Fraction(-252455039549405466513, 147573952589676412928)),
        ),
        (
            5,
            gaussian(4, 3),
            gaussian(
                58604955584641578954030966530484875253297329000101560480,
                -69984733631939902694215153740002368436325991046609895240,
            ),
        ),
    ]


@pytest.fixture
def config_file(tmp_path):
    """Write a config file and return its path."""
    def write(text: str):
        path = tmp_path / "config.json"
        path.write_text(text, encoding="utf-8")
        return str(path)
    return write
