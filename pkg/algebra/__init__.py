"""Exact-arithmetic kernel for Boolean product polynomials and their Schur expansions."""

__version__ = "0.1.0"
