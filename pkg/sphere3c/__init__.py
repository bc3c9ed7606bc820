"""Numerical verification library for quantum mechanics on the complex 3-sphere."""

__version__ = "1.0.0"
