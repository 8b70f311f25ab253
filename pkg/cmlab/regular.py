#!/usr/bin/env python3
"""Regular points of the commuting scheme via the joint centralizer.

A commuting pair (A, B) is a regular point iff {C : AC = CA, CB = BC}
has dimension exactly n.
"""

from __future__ import annotations

import logging
from typing import Dict, List, Optional, Sequence, Tuple

from polycore import linalg
from polycore.field import CoefficientField, Scalar

from .reports import CheckOutcome, PreconditionError, VerificationReport, run_check

logger = logging.getLogger(__name__)

Matrix = Sequence[Sequence[Scalar]]


class NonCommutingError(Exception):
    def __init__(self, message: str, code: str = "NON_COMMUTING") -> None:
        super().__init__(message)
        self.code = code


def _convert(M: Matrix, field: CoefficientField) -> List[List[Scalar]]:
    return [[field.convert(x) for x in row] for row in M]


def _commutant_rows(M: List[List[Scalar]], field: CoefficientField) -> List[List[Scalar]]:
    """Rows of the linear map C -> MC - CM on row-major vec(C)."""
    n = len(M)
    rows = []
    for i in range(n):
        for j in range(n):
            row = [field.zero] * (n * n)
            for k in range(n):
                # (MC)_ij = sum_k M_ik C_kj ; (CM)_ij = sum_k C_ik M_kj
                row[k * n + j] = field.add(row[k * n + j], M[i][k])
                row[i * n + k] = field.sub(row[i * n + k], M[k][j])
            rows.append(row)
    return rows


def regular_point_test(A: Matrix, B: Matrix, field: CoefficientField) -> Tuple[int, bool]:
    """Dimension of the joint centralizer of (A, B) and whether it equals n."""
    n = len(A)
    if n == 0 or len(B) != n or any(len(r) != n for r in list(A) + list(B)):
        raise ValueError("A and B must be square matrices of the same size")
    A, B = _convert(A, field), _convert(B, field)
    if linalg.matmul(A, B, field) != linalg.matmul(B, A, field):
        raise NonCommutingError("AB != BA")
    system = _commutant_rows(A, field) + _commutant_rows(B, field)
    dim = n * n - linalg.rank(system, field)
    return dim, dim == n


def jordan_block(n: int, eigenvalue: int = 0) -> List[List[int]]:
    return [[eigenvalue if i == j else (1 if j == i + 1 else 0) for j in range(n)] for i in range(n)]


def diagonal(values: Sequence[int]) -> List[List[int]]:
    n = len(values)
    return [[values[i] if i == j else 0 for j in range(n)] for i in range(n)]


def zero_matrix(n: int) -> List[List[int]]:
    return [[0] * n for _ in range(n)]


def canonical_cases() -> Dict[str, Tuple[List[List[int]], List[List[int]], int, bool]]:
    """Named pairs with their expected centralizer dimension and regularity."""
    cases = {
        "diag12-diag34": (diagonal([1, 2]), diagonal([3, 4]), 2, True),
        "zero2": (zero_matrix(2), zero_matrix(2), 4, False),
        "identity3": (diagonal([1, 1, 1]), diagonal([1, 1, 1]), 9, False),
        "diag112-zero": (diagonal([1, 1, 2]), zero_matrix(3), 5, False),
    }
    for n in range(2, 5):
        cases[f"jordan{n}-zero"] = (jordan_block(n), zero_matrix(n), n, True)
    return cases


def check_regular_point(
    name: str,
    field: CoefficientField,
    *,
    budget_s: Optional[float] = None,
    timing: bool = True,
) -> VerificationReport:
    cases = canonical_cases()
    if name not in cases:
        raise PreconditionError(f"unknown regular-point case {name!r}; known: {sorted(cases)}")
    A, B, expected_dim, expected_regular = cases[name]
    params = {"case": name, "n": len(A), "field": field.descriptor, "expected_dim": expected_dim}

    def body(deadline) -> CheckOutcome:
        dim, regular = regular_point_test(A, B, field)
        details = f"centralizer dimension {dim}, {'regular' if regular else 'not regular'}"
        if (dim, regular) == (expected_dim, expected_regular):
            return CheckOutcome(True, details)
        return CheckOutcome(False, details, [f"expected dimension {expected_dim}"])

    return run_check(f"regular-point/{name}", params, body, budget_s=budget_s, timing=timing)
