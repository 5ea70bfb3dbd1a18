"""Semigroup tests."""
