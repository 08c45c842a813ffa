"""Exact computation of nilshadows of real solvable Lie algebras."""

__version__ = "0.1.0"
