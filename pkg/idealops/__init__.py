"""Derived ideal operations built on the Groebner engine."""

from .dimension import UnitIdealError, dimension_of_leading_ideal, independent_variables, krull_dimension
from .elimination import eliminate, radical_membership, saturate
from .jacobian import jacobian_matrix, jacobian_rank
from .presentation import IdealPresentation, extend_ring, ideal_add, ideal_equal, localize, specialize

__all__ = [
    "IdealPresentation",
    "UnitIdealError",
    "dimension_of_leading_ideal",
    "eliminate",
    "extend_ring",
    "ideal_add",
    "ideal_equal",
    "independent_variables",
    "jacobian_matrix",
    "jacobian_rank",
    "krull_dimension",
    "localize",
    "radical_membership",
    "saturate",
    "specialize",
]
