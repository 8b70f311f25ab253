"""Hypothesis strategies for sparse polynomials on small rings."""

from hypothesis import strategies as st

from polycore.field import CoefficientField
from polycore.polynomial import Polynomial
from polycore.variables import VariableSet

XYZ = VariableSet.of("x", "y", "z")
F101 = CoefficientField.prime(101)


def polynomials(vars=XYZ, field=F101, max_degree=3, max_terms=5):
    monos = st.tuples(*[st.integers(0, max_degree) for _ in vars])
    terms = st.dictionaries(monos, st.integers(-50, 50), max_size=max_terms)
    return terms.map(lambda t: Polynomial(t, vars, field))


def points(vars=XYZ, field=F101):
    return st.tuples(*[st.integers(0, field.characteristic - 1) for _ in vars])
