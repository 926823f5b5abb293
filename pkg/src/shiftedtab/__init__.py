"""Shifted tableaux, insertion algorithms and Schur-type coefficients."""

__version__ = "0.1.0"
