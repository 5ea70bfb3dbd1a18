"""Exact arithmetic tests."""
