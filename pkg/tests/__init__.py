"""pfrobenius test suite."""
