"""Hadamard products, ranks and border ranks of projective varieties."""

__version__ = "0.1.0"
