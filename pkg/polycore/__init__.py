"""Exact sparse multivariate polynomial arithmetic."""

from .field import CoefficientField, FieldError, parse_field
from .monomials import Comparison, MonomialOrder, compare
from .parser import ParseError, parse_polynomial
from .point import Point
from .polynomial import Polynomial, add, evaluate, format_polynomial, mul, partial_derivative, substitute
from .variables import Monomial, PolynomialError, VariableSet

__all__ = [
    "CoefficientField",
    "Comparison",
    "FieldError",
    "Monomial",
    "MonomialOrder",
    "ParseError",
    "Point",
    "Polynomial",
    "PolynomialError",
    "VariableSet",
    "add",
    "compare",
    "evaluate",
    "format_polynomial",
    "mul",
    "parse_field",
    "parse_polynomial",
    "partial_derivative",
    "substitute",
]
