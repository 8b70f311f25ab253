#!/usr/bin/env python3
"""Jacobian matrices of generator lists evaluated at rational points."""

from __future__ import annotations

from typing import List, Sequence

from polycore.field import Scalar
from polycore.linalg import rank
from polycore.point import Point
from polycore.polynomial import Polynomial
from polycore.variables import PolynomialError


def jacobian_matrix(gens: Sequence[Polynomial], p: Point) -> List[List[Scalar]]:
    """Rows are generators, columns follow the variable order of the point."""
    for g in gens:
        if g.vars != p.vars or g.field != p.field:
            raise PolynomialError("generator and point live on different rings", code="MISMATCH")
    return [[g.partial_derivative(v).evaluate(p) for v in p.vars] for g in gens]


def jacobian_rank(gens: Sequence[Polynomial], p: Point) -> int:
    if not gens:
        return 0
    return rank(jacobian_matrix(gens, p), p.field)
