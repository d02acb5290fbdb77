"""Equivariant commutative algebra toolkit for 2x2 minor and permanent ideals."""

__version__ = "0.1.0"
