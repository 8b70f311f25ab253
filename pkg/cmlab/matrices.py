#!/usr/bin/env python3
"""Small dense matrices with polynomial entries."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, List, Sequence, Tuple

from polycore.field import CoefficientField
from polycore.polynomial import Polynomial
from polycore.variables import VariableSet

PolyMatrix = List[List[Polynomial]]


@dataclass(frozen=True)
class Ring:
    vars: VariableSet
    field: CoefficientField

    @classmethod
    def of(cls, names: Sequence[str], field: CoefficientField) -> "Ring":
        return cls(VariableSet(tuple(names)), field)

    def var(self, name: str) -> Polynomial:
        return Polynomial.variable(name, self.vars, self.field)

    def const(self, c: Any) -> Polynomial:
        return Polynomial.constant(c, self.vars, self.field)

    def zero(self) -> Polynomial:
        return Polynomial.zero(self.vars, self.field)


def symbolic(ring: Ring, prefix: str, n: int) -> PolyMatrix:
    """n x n matrix of the variables ``{prefix}{i}{j}``."""
    return [[ring.var(f"{prefix}{i}{j}") for j in range(1, n + 1)] for i in range(1, n + 1)]


def column(ring: Ring, prefix: str, n: int) -> PolyMatrix:
    return [[ring.var(f"{prefix}{i}")] for i in range(1, n + 1)]


def row(ring: Ring, prefix: str, n: int) -> PolyMatrix:
    return [[ring.var(f"{prefix}{i}") for i in range(1, n + 1)]]


def constant(ring: Ring, values: Sequence[Sequence[Any]]) -> PolyMatrix:
    return [[ring.const(v) for v in r] for r in values]


def zeros(ring: Ring, r: int, c: int) -> PolyMatrix:
    return [[ring.zero() for _ in range(c)] for _ in range(r)]


def identity(ring: Ring, n: int) -> PolyMatrix:
    return [[ring.const(1 if i == j else 0) for j in range(n)] for i in range(n)]


def shape(A: PolyMatrix) -> Tuple[int, int]:
    return len(A), (len(A[0]) if A else 0)


def add(A: PolyMatrix, B: PolyMatrix) -> PolyMatrix:
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def sub(A: PolyMatrix, B: PolyMatrix) -> PolyMatrix:
    return [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def scale(A: PolyMatrix, c: Polynomial) -> PolyMatrix:
    return [[c * a for a in r] for r in A]


def mul(A: PolyMatrix, B: PolyMatrix) -> PolyMatrix:
    n, k = shape(A)
    k2, m = shape(B)
    if k != k2:
        raise ValueError(f"cannot multiply {n}x{k} by {k2}x{m}")
    out = []
    for i in range(n):
        out_row = []
        for j in range(m):
            acc = A[i][0] * B[0][j] if k else None
            for t in range(1, k):
                acc = acc + A[i][t] * B[t][j]
            out_row.append(acc)
        out.append(out_row)
    return out


def commutator(A: PolyMatrix, B: PolyMatrix) -> PolyMatrix:
    return sub(mul(A, B), mul(B, A))


def shift(A: PolyMatrix, s: Polynomial) -> PolyMatrix:
    """A - s*I."""
    return [[a - s if i == j else a for j, a in enumerate(r)] for i, r in enumerate(A)]


def minor(A: PolyMatrix, i: int, j: int) -> PolyMatrix:
    return [r[:j] + r[j + 1:] for k, r in enumerate(A) if k != i]


def det(ring: Ring, A: PolyMatrix) -> Polynomial:
    """Laplace expansion along the first row; fine for the small sizes used here."""
    n = len(A)
    if n == 0:
        return ring.const(1)
    if n == 1:
        return A[0][0]
    if n == 2:
        return A[0][0] * A[1][1] - A[0][1] * A[1][0]
    total = ring.zero()
    for j in range(n):
        if A[0][j].is_zero():
            continue
        term = A[0][j] * det(ring, minor(A, 0, j))
        total = total + term if j % 2 == 0 else total - term
    return total


def adjugate(ring: Ring, A: PolyMatrix) -> PolyMatrix:
    n = len(A)
    if n == 1:
        return [[ring.const(1)]]
    adj = zeros(ring, n, n)
    for i in range(n):
        for j in range(n):
            cof = det(ring, minor(A, i, j))
            adj[j][i] = cof if (i + j) % 2 == 0 else -cof
    return adj


def trace(ring: Ring, A: PolyMatrix) -> Polynomial:
    total = ring.zero()
    for i in range(len(A)):
        total = total + A[i][i]
    return total


def entries(A: PolyMatrix) -> List[Polynomial]:
    """Row-major entry list."""
    return [a for r in A for a in r]


def residual(A: PolyMatrix) -> List[str]:
    """Nonzero entries as ``(i,j): poly`` strings, 1-based."""
    return [f"({i + 1},{j + 1}): {a}" for i, r in enumerate(A) for j, a in enumerate(r) if not a.is_zero()]


def block(A: PolyMatrix, rows: range, cols: range) -> PolyMatrix:
    return [[A[i][j] for j in cols] for i in rows]
