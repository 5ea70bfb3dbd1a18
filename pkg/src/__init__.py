"""pfrobenius - exact p-Frobenius numbers and power sums over p-numerical semigroups."""

__version__ = "1.0.0"
