"""Exact Schubert calculus, branch divisors and multiplicity reduction for classical groups."""

__version__ = "0.1.0"
