"""Tests for number-field arithmetic."""

from fractions import Fraction

import pytest
from hypothesis import given, settings

from src.core.errors import DomainError, ModulusMismatchError, NumberFieldZeroDivisionError, ZeroDivisorError
from src.exactmath import (
    CUBE_ROOT_TWO_MODULUS,
    GAUSSIAN_MODULUS,
    NumberFieldElement,
    as_element,
    coerce,
    cyclotomic_modulus,
    element,
    gaussian,
    generator,
    nf_add,
    nf_inv,
    nf_mul,
    nf_pow,
    one,
    primitive_root_of_unity,
    rational_element,
    zero,
)
from tests.conftest import field_element_strategy, nonzero_field_element_strategy


class TestConstruction:

    def test_reduces_high_powers(self):
        # x^3 = 2 modulo x^3 - 2
        assert element(CUBE_ROOT_TWO_MODULUS, [0, 0, 0, 1]) == 2

    def test_modulus_must_be_monic(self):
        with pytest.raises(DomainError, match="monic"):
            element((1, 0, 2), [1])

    def test_modulus_needs_degree_one(self):
        with pytest.raises(DomainError):
            element((1,), [])

    def test_wrong_coefficient_count(self):
        with pytest.raises(DomainError):
            NumberFieldElement(GAUSSIAN_MODULUS, (Fraction(1),))

    def test_rational_element_is_scalar(self):
        q = rational_element(Fraction(3, 4))
        assert q.degree == 1
        assert q.is_rational()
        assert q.to_rational() == Fraction(3, 4)

    def test_to_rational_rejects_irrational(self):
        with pytest.raises(DomainError):
            gaussian(0, 1).to_rational()

    def test_as_element_passes_elements_through(self):
        i = gaussian(0, 1)
        assert as_element(i) is i
        assert as_element(3) == rational_element(3)

    def test_cyclotomic_requires_prime(self):
        assert cyclotomic_modulus(5) == (1, 1, 1, 1, 1)
        with pytest.raises(DomainError):
            cyclotomic_modulus(6)


class TestMultiplication:

    def test_i_squared(self):
        i = generator(GAUSSIAN_MODULUS)
        assert nf_mul(i, i) == -1

    def test_zeta5_fifth_power(self):
        zeta = primitive_root_of_unity(5)
        x4 = nf_pow(zeta, 4)
        assert nf_mul(x4, zeta) == 1
        assert not x4.is_one()

    def test_cube_root_two_cubed(self):
        c = generator(CUBE_ROOT_TWO_MODULUS)
        assert nf_mul(c, nf_mul(c, c)) == 2

    def test_mismatched_fields(self):
        with pytest.raises(ModulusMismatchError):
            nf_add(gaussian(1, 1), primitive_root_of_unity(5))

    def test_operators_coerce_rationals(self):
        i = gaussian(0, 1)
        assert (i + 1) * (1 - i) == 2
        assert Fraction(1, 2) * gaussian(2, 4) == gaussian(1, 2)

    @given(field_element_strategy(), field_element_strategy())
    def test_commutative_when_same_field(self, a, b):
        if a.modulus == b.modulus:
            assert a * b == b * a
            assert a + b == b + a


class TestInverse:

    def test_inverse_of_i(self):
        assert nf_inv(gaussian(0, 1)) == gaussian(0, -1)

    def test_inverse_of_four_plus_three_i(self):
        assert nf_inv(gaussian(4, 3)) == gaussian(Fraction(4, 25), Fraction(-3, 25))

    def test_scalar_inverse(self):
        assert nf_inv(rational_element(7)) == Fraction(1, 7)

    def test_zero_has_no_inverse(self):
        with pytest.raises(NumberFieldZeroDivisionError):
            nf_inv(zero(GAUSSIAN_MODULUS))

    def test_zero_divisor_in_reducible_ring(self):
        # x^2 - 1 = (x - 1)(x + 1)
        with pytest.raises(ZeroDivisorError):
            nf_inv(element((-1, 0, 1), [1, 1]))

    @settings(max_examples=100, deadline=None)
    @given(nonzero_field_element_strategy())
    def test_inverse_property(self, a):
        assert a * nf_inv(a) == one(a.modulus)

    def test_division_operator(self):
        assert gaussian(1, 0) / gaussian(0, 1) == gaussian(0, -1)
        assert 1 / gaussian(0, 2) == gaussian(0, Fraction(-1, 2))


class TestPower:

    def test_zero_exponent(self):
        assert nf_pow(gaussian(3, 7), 0) == 1

    def test_scalar_power(self):
        assert nf_pow(rational_element(2), 10) == 1024

    def test_negative_exponent_rejected(self):
        with pytest.raises(DomainError):
            nf_pow(gaussian(1, 1), -1)

    def test_operator_allows_negative_exponent(self):
        assert gaussian(0, 1) ** -1 == gaussian(0, -1)

    @given(nonzero_field_element_strategy())
    def test_power_adds_exponents(self, a):
        assert nf_pow(a, 3) * nf_pow(a, 4) == nf_pow(a, 7)


class TestEquality:

    def test_equal_to_rational(self):
        assert coerce(Fraction(1, 3), GAUSSIAN_MODULUS) == Fraction(1, 3)

    def test_hash_consistent_with_rational_equality(self):
        assert hash(rational_element(5)) == hash(5)

    def test_different_fields_differ(self):
        assert one(GAUSSIAN_MODULUS) != one(CUBE_ROOT_TWO_MODULUS)


class TestSerialization:

    def test_to_dict(self):
        assert gaussian(Fraction(1, 2), -3).to_dict() == {"modulus": [1, 0, 1], "coeffs": ["1/2", "-3/1"]}

    def test_from_dict_round_trip(self):
        zeta = primitive_root_of_unity(5)
        assert NumberFieldElement.from_dict(zeta.to_dict()) == zeta

    def test_from_dict_malformed(self):
        with pytest.raises(DomainError):
            NumberFieldElement.from_dict({"modulus": [1, 0, 1]})

    def test_str(self):
        assert str(gaussian(1, -2)) == "1 + -2*x"
        assert str(zero(GAUSSIAN_MODULUS)) == "0"
