"""Tests for brute-force enumeration of the complement of S_p."""

from hypothesis import given, settings

from src.exactmath import gaussian
from src.oracle import (
    ComplementSet,
    brute_alternating_sum,
    brute_frobenius,
    brute_genus,
    brute_power_sum,
    brute_sylvester_sum,
    brute_weighted_sum,
    complement_set,
)
from src.semigroup import denumerant_table, validate_generators
from tests.conftest import wide_generators_strategy, wide_p_strategy


class TestComplementSet:

    def test_fourteen_to_twenty_nine(self, gens_14_29, gaps_14_29):
        assert complement_set(gens_14_29, 0).elements == gaps_14_29

    def test_five_seven_eleven_p4(self, gens_5_7_11):
        cs = complement_set(gens_5_7_11, 4)
        assert cs.elements == tuple(range(47)) + (48,)
        assert cs.positive() == tuple(range(1, 47)) + (48,)
        assert 48 in cs
        assert 47 not in cs

    def test_membership(self, gens_14_29, gaps_14_29):
        cs = complement_set(gens_14_29, 0)
        assert [n for n in range(-5, 100) if n in cs] == list(gaps_14_29)
        assert "1" not in cs
        assert 67.5 not in cs

    def test_five_seven_eleven_p0(self, gens_5_7_11):
        assert complement_set(gens_5_7_11, 0).elements == (1, 2, 3, 4, 6, 8, 9, 13)

    def test_two_three(self):
        assert complement_set(validate_generators([2, 3]), 0).elements == (1,)

    def test_empty(self):
        cs = complement_set(validate_generators([1, 5]), 0)
        assert len(cs) == 0
        assert brute_frobenius(cs) == -1
        assert brute_power_sum(cs, 3) == 0
        assert brute_weighted_sum(cs, 1, 2) == 0

    def test_small_initial_bound_doubles(self, gens_5_7_11):
        assert complement_set(gens_5_7_11, 4, initial_bound=4) == complement_set(gens_5_7_11, 4)

    @settings(max_examples=60, deadline=None)
    @given(wide_generators_strategy(), wide_p_strategy)
    def test_members_are_exactly_the_low_counts(self, gens, p):
        cs = complement_set(gens, p)
        bound = (cs.elements[-1] if cs.elements else 0) + 2 * gens.a1 * max(gens.values)
        table = denumerant_table(gens, bound)
        assert cs.elements == tuple(n for n in range(bound + 1) if table[n] <= p)


class TestBruteSums:

    def test_five_seven_eleven_p4(self, gens_5_7_11):
        cs = complement_set(gens_5_7_11, 4)
        assert brute_frobenius(cs) == 48
        assert brute_genus(cs) == 48
        assert brute_sylvester_sum(cs) == 1129
        assert brute_power_sum(cs, 1) == 1129
        assert brute_power_sum(cs, 6) == 79330369495
        assert brute_alternating_sum(cs) == 71

    def test_mu_zero_counts(self, gens_5_7_11):
        cs = complement_set(gens_5_7_11, 4)
        assert brute_power_sum(cs, 0) == len(cs)

    def test_weighted_two_three(self):
        cs = complement_set(validate_generators([2, 3]), 0)
        assert brute_weighted_sum(cs, 1, 2) == 2

    def test_weighted_in_gaussian_field(self):
        cs = ComplementSet(gens=validate_generators([3, 5]), p=0, elements=(1, 2, 4, 7))
        # i - 2 + 4 - 7i
        assert brute_weighted_sum(cs, 1, gaussian(0, 1)) == gaussian(2, -6)

    def test_alternating_three_five(self):
        assert brute_alternating_sum(complement_set(validate_generators([3, 5]), 0)) == -2
