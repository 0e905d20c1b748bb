"""Exact computations for quadratic points on small modular curves."""

__version__ = "0.1.0"
