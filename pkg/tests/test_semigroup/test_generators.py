"""Tests for generator validation."""

import pytest

from src.core.errors import CoprimalityError, DomainError
from src.semigroup import Generators, validate_generators


class TestValidateGenerators:

    def test_sorts(self):
        assert validate_generators([7, 5, 11]) == Generators((5, 7, 11))

    def test_already_sorted(self):
        gens = validate_generators([5, 7, 11])
        assert gens.values == (5, 7, 11)
        assert gens.a1 == 5
        assert gens.k == 3
        assert gens.to_list() == [5, 7, 11]

    def test_coprimality(self):
        with pytest.raises(CoprimalityError) as info:
            validate_generators([4, 6])
        assert info.value.context["gcd"] == 2
        assert info.value.exit_code == 3

    def test_pairwise_common_factors_allowed(self):
        assert validate_generators([6, 10, 15]).values == (6, 10, 15)

    @pytest.mark.parametrize("raw", [[5], [], [0, 3], [-2, 3], [3, 3, 4], [2.0, 3], [True, 3]])
    def test_domain_errors(self, raw):
        with pytest.raises(DomainError):
            validate_generators(raw)

    def test_one_is_allowed(self):
        assert validate_generators([1, 4]).a1 == 1
