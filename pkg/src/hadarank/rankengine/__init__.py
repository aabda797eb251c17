"""Exact Hadamard rank: decompositions, certificates, zero-dimensional solving."""
