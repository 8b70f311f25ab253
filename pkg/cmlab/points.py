#!/usr/bin/env python3
"""The closed points P_{m1 m2} of J(m)+(t, w_m) and the Jacobian rank check there.

P_{m1 m2} has diagonal A and B with
    a_i = 1 for i <= m1, a_i = i + 1 otherwise,
    b_j = 1 for j > m - m2, b_j = m + j + 2 otherwise,
alpha = (1,...,1, 0,...,0) with m1 ones, beta = (0,...,0, 1,...,1) with m2 ones,
and t1 = t2 = 1. Distinctness holds over Q and over F_p for p > 2m + 3.
"""

from __future__ import annotations

import logging
from typing import Dict, List, Optional, Tuple

from idealops.jacobian import jacobian_rank
from polycore.field import CoefficientField
from polycore.point import Point
from polycore.polynomial import Polynomial

from . import matrices as mx
from .matrices import Ring
from .reports import CheckOutcome, PreconditionError, VerificationReport, run_check
from .schemes import family_variables

logger = logging.getLogger(__name__)


def cv_variables(m: int) -> List[str]:
    """Variables of J(m)+(t, w_m): the R_tilde ring with t specialized away."""
    return [v for v in family_variables("R_tilde", m) if v != "t"]


def lemma58_generators(m: int, field: CoefficientField) -> List[Polynomial]:
    """f_ij (all m^2 commutator entries), g_i, h_i and w_m, in that order."""
    ring = Ring.of(cv_variables(m), field)
    X, Y = mx.symbolic(ring, "x", m), mx.symbolic(ring, "y", m)
    u, v = mx.column(ring, "u", m), mx.row(ring, "v", m)
    gens = mx.entries(mx.commutator(X, Y))
    gens += mx.entries(mx.mul(mx.shift(X, ring.var("t1")), u))
    gens += mx.entries(mx.mul(v, mx.shift(Y, ring.var("t2"))))
    gens += mx.entries(mx.mul(v, u))
    return gens


def validate_triple(m: int, m1: int, m2: int) -> None:
    if m < 1 or m1 < 0 or m2 < 0:
        raise PreconditionError(f"invalid triple (m, m1, m2) = ({m}, {m1}, {m2})")
    if m1 + m2 > m:
        raise PreconditionError(f"m1 + m2 = {m1 + m2} exceeds m = {m}")


def valid_triples(m: int) -> List[Tuple[int, int]]:
    return [(m1, m2) for m1 in range(m + 1) for m2 in range(m + 1 - m1)]


def eigenvalue_tables(m: int, m1: int, m2: int, coincident: bool = False) -> Tuple[List[int], List[int]]:
    """Diagonals of A and B; ``coincident`` collapses every a_i to 1 (a corrupted table)."""
    a = [1 if (i <= m1 or coincident) else i + 1 for i in range(1, m + 1)]
    b = [1 if j > m - m2 else m + j + 2 for j in range(1, m + 1)]
    return a, b


def point_P(m: int, m1: int, m2: int, field: Optional[CoefficientField] = None, coincident: bool = False) -> Point:
    validate_triple(m, m1, m2)
    field = field or CoefficientField.rationals()
    a, b = eigenvalue_tables(m, m1, m2, coincident)
    values: Dict[str, int] = {}
    for i in range(1, m + 1):
        for j in range(1, m + 1):
            values[f"x{i}{j}"] = a[i - 1] if i == j else 0
            values[f"y{i}{j}"] = b[i - 1] if i == j else 0
    for i in range(1, m + 1):
        values[f"u{i}"] = 1 if i <= m1 else 0
        values[f"v{i}"] = 1 if i > m - m2 else 0
    values["t1"] = 1
    values["t2"] = 1
    ring = Ring.of(cv_variables(m), field)
    return Point.from_mapping(values, ring.vars, field)


def vanishing_failures(gens: List[Polynomial], p: Point) -> List[str]:
    failures = []
    for i, g in enumerate(gens):
        val = g.evaluate(p)
        if val != 0:
            failures.append(f"generator {i + 1} ({g}) = {p.field.format(val)}")
    return failures


def check_jacobian_rank(
    m: int,
    m1: int,
    m2: int,
    field: Optional[CoefficientField] = None,
    *,
    point: Optional[Point] = None,
    coincident: bool = False,
    budget_s: Optional[float] = None,
    timing: bool = True,
) -> VerificationReport:
    """Rank of the Jacobian of (f_ij, g_i, h_i, w_m) at P_{m1 m2}, expected m^2 + m.

    Generator vanishing at the point is asserted before the rank.
    """
    validate_triple(m, m1, m2)
    field = field or CoefficientField.rationals()
    p = point or point_P(m, m1, m2, field, coincident)
    gens = lemma58_generators(m, field)
    expected = m * m + m
    params = {"m": m, "m1": m1, "m2": m2, "field": field.descriptor, "expected_rank": expected}

    def body(deadline) -> CheckOutcome:
        failures = vanishing_failures(gens, p)
        if failures:
            return CheckOutcome(False, f"point is not on J({m})+(t,w{m}); rank not asserted", failures)
        deadline.check("jacobian")
        r = jacobian_rank(gens, p)
        details = f"rank={r} (expected {expected}) at {p.describe()}"
        if r == expected:
            return CheckOutcome(True, details)
        return CheckOutcome(False, details, [f"rank {r} != {expected}"])

    return run_check(f"jacobian/m={m}/m1={m1}/m2={m2}", params, body, budget_s=budget_s, timing=timing)
