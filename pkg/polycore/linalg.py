#!/usr/bin/env python3
"""Exact linear algebra over the coefficient fields via sympy DomainMatrix."""

from __future__ import annotations

from typing import Any, List, Sequence

from sympy.polys.domains import GF, QQ
from sympy.polys.matrices import DomainMatrix

from .field import CoefficientField, FieldError, Scalar

Rows = Sequence[Sequence[Scalar]]


def domain_for(field: CoefficientField) -> Any:
    return GF(field.characteristic) if field.is_prime else QQ


def to_domain_matrix(rows: Rows, field: CoefficientField, ncols: int | None = None) -> DomainMatrix:
    K = domain_for(field)
    rows = [list(r) for r in rows]
    cols = len(rows[0]) if rows else (ncols or 0)
    data = [[K(int(v)) if field.is_prime else K.convert(v) for v in r] for r in rows]
    return DomainMatrix(data, (len(rows), cols), K)


def from_domain(value: Any, field: CoefficientField) -> Scalar:
    if field.is_prime:
        return int(value) % field.characteristic
    return QQ.convert(value)


def to_rows(M: DomainMatrix, field: CoefficientField) -> List[List[Scalar]]:
    return [[from_domain(v, field) for v in row] for row in M.to_list()]


def rank(rows: Rows, field: CoefficientField) -> int:
    if not rows or not len(rows[0]):
        return 0
    return int(to_domain_matrix(rows, field).rank())


def determinant(rows: Rows, field: CoefficientField) -> Scalar:
    return from_domain(to_domain_matrix(rows, field).det(), field)


def inverse(rows: Rows, field: CoefficientField) -> List[List[Scalar]]:
    M = to_domain_matrix(rows, field)
    if M.det() == M.domain.zero:
        raise FieldError("matrix is singular", code="SINGULAR")
    return to_rows(M.inv(), field)


def nullspace(rows: Rows, field: CoefficientField) -> List[List[Scalar]]:
    """Basis of the right kernel {v : M v = 0}, one vector per entry."""
    if not rows:
        return []
    M = to_domain_matrix(rows, field)
    return to_rows(M.nullspace(), field)


def matmul(A: Rows, B: Rows, field: CoefficientField) -> List[List[Scalar]]:
    n, k, m = len(A), len(B), len(B[0]) if B else 0
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = field.zero
            for t in range(k):
                acc = field.add(acc, field.mul(A[i][t], B[t][j]))
            row.append(acc)
        out.append(row)
    return out


def identity(n: int, field: CoefficientField) -> List[List[Scalar]]:
    return [[field.one if i == j else field.zero for j in range(n)] for i in range(n)]
