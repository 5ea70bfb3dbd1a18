"""Closed-form tests."""
