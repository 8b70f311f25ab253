"""Groebner bases, normal forms and ideal membership."""

from .buchberger import GroebnerBasis, buchberger, ideal_membership, is_groebner
from .division import Reducer, normal_form, s_polynomial

__all__ = ["GroebnerBasis", "Reducer", "buchberger", "ideal_membership", "is_groebner", "normal_form", "s_polynomial"]
