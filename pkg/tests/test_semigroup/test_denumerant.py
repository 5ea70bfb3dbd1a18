"""Tests for denumerants d(n; a_1, ..., a_k)."""

import pytest
from hypothesis import given, settings, strategies as st

from src.core.errors import DomainError
from src.semigroup import denumerant, denumerant_series, denumerant_table, is_in_Sp, validate_generators
from tests.conftest import generators_strategy


class TestDenumerantTable:

    def test_matches_published_table(self, gens_5_7_11, table_5_7_11):
        table = denumerant_table(gens_5_7_11, 100)
        assert table.counts == table_5_7_11

    @pytest.mark.parametrize("n, expected", [(0, 1), (5, 1), (10, 1), (13, 0), (35, 3), (40, 4), (100, 16)])
    def test_anchors(self, gens_5_7_11, n, expected):
        assert denumerant(n, gens_5_7_11) == expected

    def test_two_three(self):
        gens = validate_generators([2, 3])
        assert list(denumerant_table(gens, 5).counts) == [1, 0, 1, 1, 1, 1]

    def test_bound_zero(self, gens_5_7_11):
        assert denumerant_table(gens_5_7_11, 0).counts == (1,)

    def test_negative_bound(self, gens_5_7_11):
        with pytest.raises(DomainError):
            denumerant_table(gens_5_7_11, -1)

    def test_negative_index_is_zero(self, gens_5_7_11):
        table = denumerant_table(gens_5_7_11, 10)
        assert table[-3] == 0
        assert denumerant(-3, gens_5_7_11) == 0

    def test_index_beyond_bound(self, gens_5_7_11):
        with pytest.raises(IndexError):
            denumerant_table(gens_5_7_11, 10)[11]

    def test_rows(self, gens_5_7_11):
        assert denumerant_table(gens_5_7_11, 5).rows() == [(0, 1), (1, 0), (2, 0), (3, 0), (4, 0), (5, 1)]

    @settings(max_examples=50, deadline=None)
    @given(generators_strategy())
    def test_monotone_along_residue_classes(self, gens):
        table = denumerant_table(gens, 120)
        a1 = gens.a1
        assert all(table[n + a1] >= table[n] for n in range(121 - a1))

    @settings(max_examples=50, deadline=None)
    @given(generators_strategy(), st.integers(min_value=0, max_value=80))
    def test_matches_generating_function(self, gens, bound):
        assert list(denumerant_table(gens, bound).counts) == denumerant_series(gens, bound)


class TestMembership:

    @pytest.mark.parametrize("n, p, expected", [(40, 3, True), (40, 4, False), (-3, 0, False), (0, 0, True)])
    def test_is_in_Sp(self, gens_5_7_11, n, p, expected):
        assert is_in_Sp(n, gens_5_7_11, p) is expected

    def test_table_membership(self, gens_5_7_11):
        table = denumerant_table(gens_5_7_11, 60)
        assert table.in_Sp(47, 4)
        assert not table.in_Sp(48, 4)
        assert not table.in_Sp(-1, 0)
