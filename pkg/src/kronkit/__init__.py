"""Exact finite-group tensor-product multiplicities, conjugacy counting,
and character tables, with brute-force oracles for every identity."""

__version__ = "1.0.0"
