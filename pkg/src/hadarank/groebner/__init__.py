"""Groebner bases: Buchberger's algorithm, normal forms, elimination, dimension."""

from .budget import DEFAULT_STEP_BUDGET, Budget
from .cache import set_cache_dir
from .orders import GREVLEX, LEX, MonomialOrder, block
from .ops import (
    GroebnerBasis,
    buchberger,
    eliminate,
    groebner_basis,
    ideals_equal,
    intersect_ideals,
    is_unit_ideal,
    krull_dimension,
    normal_form,
    projective_dimension,
    radical_membership,
    standard_monomials,
)

__all__ = [
    "Budget", "DEFAULT_STEP_BUDGET", "set_cache_dir", "GREVLEX", "LEX", "MonomialOrder", "block",
    "GroebnerBasis", "buchberger", "eliminate", "groebner_basis", "ideals_equal",
    "intersect_ideals", "is_unit_ideal", "krull_dimension", "normal_form",
    "projective_dimension", "radical_membership", "standard_monomials",
]
