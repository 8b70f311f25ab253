#!/usr/bin/env python3
"""One-parameter degeneration families through points of CV(m).

Each family deforms a tuple (A, B, alpha, beta, a, b) of CV(m) along a
parameter c so that the member at c = 0 is the tuple itself:

    L54  B(c) = B + c * [[alpha2 beta2, 0], [0, 0]]      beta2 A2 = 0, beta2 alpha2 != 0
    L55  B(c) = B + c * [[0, 0], [0, B4']]                A2 alpha' = 0
    L56  A(d) = A + d e11, B(d) = B + (b2 / a2) d e11      m = 2, single-eigenvalue A
    L59  A(c) = A + c * (alpha'_i beta'_j / (b - b_i))    diagonal A, B

family_check verifies the displayed identities symbolically in c.
"""

from __future__ import annotations

import logging
from typing import Dict, List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, conint, model_validator

from polycore import linalg
from polycore.field import CoefficientField, FieldError, Scalar
from polycore.polynomial import Polynomial

from . import matrices as mx
from .matrices import PolyMatrix, Ring
from .reports import CheckOutcome, PreconditionError, VerificationReport, run_check

logger = logging.getLogger(__name__)

FamilyKind = Literal["L54", "L55", "L56", "L59"]
Entry = Union[int, str]


class HypothesisViolation(Exception):
    """An instance does not satisfy the hypotheses of its family."""
    def __init__(self, message: str, code: str = "HYPOTHESIS") -> None:
        super().__init__(message)
        self.code = code


class FamilyInstance(BaseModel):
    """Constant data (A, B, alpha, beta, a, b) plus the block split of its family."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    kind: FamilyKind
    A: List[List[Entry]]
    B: List[List[Entry]]
    alpha: List[Entry]
    beta: List[Entry]
    a: Entry = 0
    b: Entry = 0
    r: Optional[conint(ge=1)] = None
    m1: Optional[conint(ge=0)] = None
    m2: Optional[conint(ge=0)] = None

    @property
    def m(self) -> int:
        return len(self.A)

    @model_validator(mode="after")
    def _shapes(self) -> "FamilyInstance":
        m = self.m
        for name, M in (("A", self.A), ("B", self.B)):
            if any(len(row) != m for row in M) or len(M) != m:
                raise ValueError(f"{name} must be square of size {m}")
        if len(self.alpha) != m or len(self.beta) != m:
            raise ValueError(f"alpha and beta must have length {m}")
        if self.kind in ("L54", "L55") and self.r is None:
            raise ValueError(f"{self.kind} needs the block size r")
        if self.kind == "L59" and (self.m1 is None or self.m2 is None):
            raise ValueError("L59 needs m1 and m2")
        return self


_CANONICAL: Dict[Tuple[str, int], Dict] = {
    ("L59", 2): dict(A=[[0, 0], [0, 1]], B=[[0, 0], [0, 1]], alpha=[1, 0], beta=[0, 1], a=0, b=1, m1=1, m2=1),
    ("L59", 3): dict(
        A=[[0, 0, 0], [0, 2, 0], [0, 0, 3]], B=[[4, 0, 0], [0, 1, 0], [0, 0, 1]],
        alpha=[1, 0, 0], beta=[0, 1, 1], a=0, b=1, m1=1, m2=2,
    ),
    ("L54", 2): dict(A=[[0, 0], [0, 0]], B=[[0, 1], [0, 0]], alpha=[1, 0], beta=[0, 1], r=1),
    ("L54", 3): dict(
        A=[[0, 0, 1], [0, 0, 0], [0, 0, 0]], B=[[0, 0, 0], [0, 0, 1], [0, 0, 0]],
        alpha=[1, 0, 0], beta=[0, 0, 1], r=2,
    ),
    ("L55", 2): dict(A=[[0, 0], [0, 0]], B=[[1, 1], [0, 1]], alpha=[1, 0], beta=[0, 1], a=0, b=1, r=1),
    ("L55", 3): dict(A=[[0, 1, 0], [0, 0, 0], [0, 0, 0]], B=[[0, 0, 0]] * 3, alpha=[1, 0, 0], beta=[0, 1, 0], r=1),
    ("L56", 2): dict(A=[[0, 1], [0, 0]], B=[[0, 1], [0, 0]], alpha=[1, 0], beta=[0, 1]),
}


def canonical_instance(kind: str, m: int) -> FamilyInstance:
    """A hypothesis-satisfying instance; L56 exists only at m = 2."""
    data = _CANONICAL.get((kind, m))
    if data is None:
        raise PreconditionError(f"no canonical {kind} instance at m={m}")
    return FamilyInstance(kind=kind, **data)


def canonical_cases() -> List[Tuple[str, int]]:
    return sorted(_CANONICAL)


class _Data:
    """Instance entries converted into the field."""

    def __init__(self, inst: FamilyInstance, field: CoefficientField) -> None:
        cv = field.convert
        self.field = field
        self.m = inst.m
        self.A = [[cv(x) for x in row] for row in inst.A]
        self.B = [[cv(x) for x in row] for row in inst.B]
        self.alpha = [cv(x) for x in inst.alpha]
        self.beta = [cv(x) for x in inst.beta]
        self.a = cv(inst.a)
        self.b = cv(inst.b)
        self.r, self.m1, self.m2 = inst.r, inst.m1, inst.m2

    def require(self, cond: bool, what: str) -> None:
        if not cond:
            raise HypothesisViolation(what)

    def require_cv(self) -> None:
        F = self.field
        col = [[x] for x in self.alpha]
        row = [self.beta]
        self.require(linalg.matmul(self.A, self.B, F) == linalg.matmul(self.B, self.A, F), "AB = BA")
        Aa = linalg.matmul(self.A, col, F)
        self.require(all(Aa[i][0] == F.mul(self.a, self.alpha[i]) for i in range(self.m)), "A alpha = a alpha")
        bB = linalg.matmul(row, self.B, F)[0]
        self.require(all(bB[j] == F.mul(self.b, self.beta[j]) for j in range(self.m)), "beta B = b beta")
        self.require(linalg.matmul(row, col, F)[0][0] == F.zero, "beta alpha = 0")

    def require_zero_block(self, M, rows, cols, what: str) -> None:
        self.require(all(M[i][j] == self.field.zero for i in rows for j in cols), what)

    def require_scalar_block(self, M, idx, what: str) -> Scalar:
        s = M[idx[0]][idx[0]]
        ok = all(M[i][j] == (s if i == j else self.field.zero) for i in idx for j in idx)
        self.require(ok, what)
        return s


def _first_nonzero(vec: List[Scalar], field: CoefficientField) -> int:
    return next(k for k, x in enumerate(vec) if x != field.zero)


def _members(kind: str, d: _Data, ring: Ring, c: Polynomial, denominator_override: Optional[Scalar]):
    """Build the family and the identities it must satisfy; each identity is a matrix that must vanish."""
    F = d.field
    m = d.m
    A0, B0 = mx.constant(ring, d.A), mx.constant(ring, d.B)
    alpha = [[ring.const(x)] for x in d.alpha]
    beta = [[ring.const(x) for x in d.beta]]
    a, b = ring.const(d.a), ring.const(d.b)
    identities: List[Tuple[str, PolyMatrix]] = []

    if kind == "L59":
        m1, m2 = d.m1, d.m2
        d.require(m1 + m2 <= m, "m1 + m2 <= m")
        a_tail = [d.A[i][i] for i in range(m1, m)]
        b_head = [d.B[i][i] for i in range(m - m2)]
        d.require(all(d.A[i][j] == F.zero for i in range(m) for j in range(m) if i != j), "A diagonal")
        d.require(all(d.B[i][j] == F.zero for i in range(m) for j in range(m) if i != j), "B diagonal")
        d.require(all(d.A[i][i] == d.a for i in range(m1)), "A = diag(a I_m1, ...)")
        d.require(all(d.B[i][i] == d.b for i in range(m - m2, m)), "B = diag(..., b I_m2)")
        d.require(len(set([d.a] + a_tail)) == m - m1 + 1, "a, a_1, ..., a_(m-m1) pairwise distinct")
        d.require(len(set(b_head + [d.b])) == m - m2 + 1, "b_1, ..., b_(m-m2), b pairwise distinct")
        d.require(all(x == F.zero for x in d.alpha[m1:]), "alpha = (alpha', 0)")
        d.require(all(x == F.zero for x in d.beta[:m - m2]), "beta = (0, beta')")
        Ac = [row[:] for row in A0]
        for i in range(m1):
            den = denominator_override if denominator_override is not None else F.sub(d.b, d.B[i][i])
            if den == F.zero:
                raise HypothesisViolation(f"denominator b - b_{i + 1} vanishes")
            for j in range(m - m2, m):
                coef = F.div(F.mul(d.alpha[i], d.beta[j]), den)
                Ac[i][j] = Ac[i][j] + c.scale(coef)
        identities.append(("A(c)B - BA(c) - c alpha beta", mx.sub(mx.commutator(Ac, B0), mx.scale(mx.mul(alpha, beta), c))))
        identities.append(("A(c) alpha - a alpha", mx.sub(mx.mul(Ac, alpha), mx.scale(alpha, a))))
        return identities, ("A", Ac, A0)

    if kind == "L54":
        r = d.r
        d.require(0 < r < m, "0 < r < m")
        ap = d.require_scalar_block(d.A, range(r), "A = [[a' I_r, A2], [0, A4]]")
        d.require_zero_block(d.A, range(r, m), range(r), "A lower-left block vanishes")
        d.require_zero_block(d.B, range(r, m), range(r), "B lower-left block vanishes")
        d.require(all(x == F.zero for x in d.beta[:r]), "beta = (0, beta1)")
        A2 = [row[r:] for row in d.A[:r]]
        d.require(linalg.rank(A2, F) < r, "rank(A2) < r")
        left = linalg.nullspace([list(col) for col in zip(*A2)], F)
        beta2 = left[0]
        k = _first_nonzero(beta2, F)
        alpha2 = [F.one if i == k else F.zero for i in range(r)]
        Bc = [row[:] for row in B0]
        for i in range(r):
            for j in range(r):
                Bc[i][j] = Bc[i][j] + c.scale(F.mul(alpha2[i], beta2[j]))
        b2a2 = F.mul(beta2[k], alpha2[k])
        identities.append(("AB(c) - B(c)A", mx.commutator(A0, Bc)))
        identities.append(("beta B(c) - b beta", mx.sub(mx.mul(beta, Bc), mx.scale(beta, b))))
        identities.append(("tr B(c) - tr B - c beta2 alpha2", [[mx.trace(ring, Bc) - mx.trace(ring, B0) - c.scale(b2a2)]]))
        logger.debug("L54 a'=%s beta2=%s alpha2=%s", F.format(ap), beta2, alpha2)
        return identities, ("B", Bc, B0)

    if kind == "L55":
        r = d.r
        d.require(0 < r < m, "0 < r < m")
        ap = d.require_scalar_block(d.A, range(r), "A top-left block is a' I_r")
        ap4 = d.require_scalar_block(d.A, range(r, m), "A bottom-right block is a' I_(m-r)")
        d.require(ap == ap4, "A = [[a' I_r, A2], [0, a' I_(m-r)]]")
        d.require_zero_block(d.A, range(r, m), range(r), "A lower-left block vanishes")
        d.require_zero_block(d.B, range(r, m), range(r), "B lower-left block vanishes")
        d.require(all(x == F.zero for x in d.beta[:r]), "beta = (0, beta1)")
        A2 = [row[r:] for row in d.A[:r]]
        d.require(linalg.rank(A2, F) < m - r, "rank(A2) < m - r")
        alpha_p = linalg.nullspace(A2, F)[0]
        beta1 = d.beta[r:]
        b1a = sum((F.mul(x, y) for x, y in zip(beta1, alpha_p)), F.zero)
        b1a = F.normalize(b1a)
        if b1a == F.zero:
            k = _first_nonzero(alpha_p, F)
            gamma = [F.inv(alpha_p[k]) if i == k else F.zero for i in range(m - r)]
        else:
            gamma = beta1
        B4p = [[F.mul(x, y) for y in gamma] for x in alpha_p]
        Bc = [row[:] for row in B0]
        for i in range(m - r):
            for j in range(m - r):
                Bc[r + i][r + j] = Bc[r + i][r + j] + c.scale(B4p[i][j])
        trace_p = F.normalize(sum((B4p[i][i] for i in range(m - r)), F.zero))
        shifted_b = b + c.scale(b1a)
        identities.append(("AB(c) - B(c)A", mx.commutator(A0, Bc)))
        identities.append(("beta B(c) - (b + c beta1 alpha') beta", mx.sub(mx.mul(beta, Bc), mx.scale(beta, shifted_b))))
        identities.append(("tr B(c) - tr B - c tr B4'", [[mx.trace(ring, Bc) - mx.trace(ring, B0) - c.scale(trace_p)]]))
        return identities, ("B", Bc, B0)

    # L56
    d.require(m == 2, "m = 2")
    a1, a2 = d.A[0][0], d.A[0][1]
    d.require(d.A[1][0] == F.zero and d.A[1][1] == a1, "A = [[a1, a2], [0, a1]]")
    d.require(a2 != F.zero, "a2 != 0")
    d.require(d.B[1][0] == F.zero and d.B[1][1] == d.B[0][0], "B = [[b1, b2], [0, b1]]")
    d.require(d.alpha[1] == F.zero, "alpha = (c, 0)")
    d.require(F.mul(d.beta[0], d.B[0][1]) == F.zero, "beta_1 b2 = 0")
    ratio = F.div(d.B[0][1], a2)
    Ad = [row[:] for row in A0]
    Bd = [row[:] for row in B0]
    Ad[0][0] = Ad[0][0] + c
    Bd[0][0] = Bd[0][0] + c.scale(ratio)
    identities.append(("A(d)B(d) - B(d)A(d)", mx.commutator(Ad, Bd)))
    identities.append(("beta B(d) - b beta", mx.sub(mx.mul(beta, Bd), mx.scale(beta, b))))
    identities.append(("A(d) alpha - (a + d) alpha", mx.sub(mx.mul(Ad, alpha), mx.scale(alpha, a + c))))
    return identities, ("A", Ad, A0)


def family_check(
    kind: str,
    instance: Optional[FamilyInstance] = None,
    field: Optional[CoefficientField] = None,
    *,
    m: int = 2,
    param: Optional[str] = None,
    denominator_override: Optional[Entry] = None,
    budget_s: Optional[float] = None,
    timing: bool = True,
) -> VerificationReport:
    """Verify a family's identities in the polynomial ring F[c] and that c = 0 gives the instance back.

    A hypothesis violation becomes a ``fail`` report naming the violated hypothesis.
    ``denominator_override`` replaces every L59 denominator b - b_i (the string
    "b" stands for b itself).
    """
    field = field or CoefficientField.rationals()
    inst = instance or canonical_instance(kind, m)
    if inst.kind != kind:
        raise PreconditionError(f"instance is a {inst.kind} instance, not {kind}")
    param = param or ("d" if kind == "L56" else "c")
    params = {"kind": kind, "m": inst.m, "field": field.descriptor, "param": param}
    if denominator_override is not None:
        params["denominator_override"] = denominator_override

    def body(deadline) -> CheckOutcome:
        ring = Ring.of([param], field)
        c = ring.var(param)
        data = _Data(inst, field)
        try:
            data.require_cv()
            if denominator_override == "b":
                override = data.b
            elif denominator_override is not None:
                override = field.convert(denominator_override)
            else:
                override = None
            identities, (name, deformed, original) = _members(kind, data, ring, c, override)
        except (HypothesisViolation, FieldError) as e:
            return CheckOutcome(False, f"hypothesis violated: {e}", [str(e)])
        deadline.check("family identities")
        offending: List[str] = []
        for what, M in identities:
            offending += [f"{what} {entry}" for entry in mx.residual(M)]
        at_zero = {param: ring.zero()}
        limit = [[x.substitute(at_zero, ring.vars) for x in row] for row in deformed]
        offending += [f"{name}(0) - {name} {entry}" for entry in mx.residual(mx.sub(limit, original))]
        details = f"{len(identities)} identities in {param} over {field.descriptor}; {name}(0) = {name}"
        if offending:
            return CheckOutcome(False, details, offending)
        return CheckOutcome(True, details)

    return run_check(f"family/{kind}/m={inst.m}", params, body, budget_s=budget_s, timing=timing)
