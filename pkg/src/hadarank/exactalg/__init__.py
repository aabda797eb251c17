"""Exact arithmetic: rationals, sparse polynomials, algebraic numbers, points."""

from .algebraic import AlgNum, NumberField
from .ideal import Ideal
from .parse import format_ideal, parse_ideal_text, parse_polynomial, read_ideal, write_ideal
from .points import (
    ProjPoint,
    hadamard_inverse,
    hadamard_point,
    hadamard_power,
    hadamard_product,
    ones,
)
from .polynomial import Polynomial, Ring
from .rational import ONE, ZERO, Rat, rat, rat_str


def evaluate(f: Polynomial, p):
    """Exact value of ``f`` at the coordinates of ``p``."""
    return f.evaluate(getattr(p, "coords", p))


__all__ = [
    "AlgNum", "NumberField", "Ideal", "ProjPoint", "Polynomial", "Ring", "Rat",
    "ONE", "ZERO", "rat", "rat_str", "evaluate", "parse_polynomial", "parse_ideal_text",
    "read_ideal", "write_ideal", "format_ideal", "hadamard_point", "hadamard_inverse",
    "hadamard_power", "hadamard_product", "ones",
]
