"""Oracle and verification tests."""
