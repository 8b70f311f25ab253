#!/usr/bin/env python3
"""Presentations of the commuting scheme and its intermediate rings.

Families and their variables (n x n matrices X = (x_ij), Y = (y_ij)):

    R        x, y                          entries of [X, Y]
    R1       R with x_in = 0 (i < n)
    R_tilde  x, y, u, v, t1, t2, t         [X,Y] - t*u*v, (X - t1)u, v(Y - t2)
    R_prime  x, y, u, v, vp, t1, t2, t3    [X,Y] - u*v, (X - t1)u, v(X - t2), v(Y - t3), vp(Y - t3)
    R2       R_prime plus det(X - t2)

u is a column, v and vp are rows. Specialization tags substitute constants
for variables and shrink the ring; add_w appends w = sum u_i v_i.
"""

from __future__ import annotations

import logging
from typing import Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, ValidationError, conint, field_validator, model_validator

from idealops.dimension import krull_dimension
from idealops.elimination import saturate
from idealops.presentation import IdealPresentation, ideal_equal, specialize
from polycore.field import CoefficientField
from polycore.monomials import MonomialOrder
from polycore.polynomial import Polynomial

from . import matrices as mx
from .matrices import Ring
from .reports import CheckOutcome, PreconditionError, VerificationReport, run_check

logger = logging.getLogger(__name__)

Family = Literal["R", "R_tilde", "R1", "R_prime", "R2"]
Tag = Literal["t=0", "t=1", "add_w", "kill_xin", "kill_yni", "kill_v", "det_t2"]

_ALLOWED: Dict[str, Tuple[str, ...]] = {
    "t=0": ("R_tilde",),
    "t=1": ("R_tilde",),
    "add_w": ("R_tilde", "R_prime", "R2"),
    "kill_xin": ("R", "R1"),
    "kill_yni": ("R", "R1"),
    "kill_v": ("R_prime", "R2"),
    "det_t2": ("R_prime",),
}
_BASE_LABEL = {"R": "I", "R1": "I1", "R_tilde": "J", "R_prime": "J'", "R2": "J2"}


class SchemeSpecError(Exception):
    """Raised for invalid family/tag combinations."""
    def __init__(self, message: str, code: str = "TAGS") -> None:
        super().__init__(message)
        self.code = code


class SchemeSpec(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    family: Family
    n: conint(ge=1)
    extra: Tuple[Tag, ...] = Field(default_factory=tuple)

    @field_validator("extra", mode="before")
    @classmethod
    def _split_tags(cls, v):
        if isinstance(v, str):
            return tuple(t.strip() for t in v.split(",") if t.strip())
        return v

    @field_validator("extra", mode="after")
    @classmethod
    def _canonical_order(cls, v):
        rank = {tag: i for i, tag in enumerate(_ALLOWED)}
        return tuple(sorted(v, key=rank.__getitem__))

    @model_validator(mode="after")
    def _tags_fit_family(self) -> "SchemeSpec":
        if len(set(self.extra)) != len(self.extra):
            raise ValueError(f"repeated specialization tags {list(self.extra)}")
        if "t=0" in self.extra and "t=1" in self.extra:
            raise ValueError("t=0 and t=1 are mutually exclusive")
        for tag in self.extra:
            if self.family not in _ALLOWED[tag]:
                raise ValueError(f"tag {tag} does not apply to family {self.family}")
        return self

    @classmethod
    def create(cls, family: str, n: int, extra=()) -> "SchemeSpec":
        try:
            return cls(family=family, n=n, extra=extra)
        except ValidationError as e:
            problems = "; ".join(err["msg"] for err in e.errors())
            raise SchemeSpecError(f"invalid scheme {family}({n}) {list(extra) if not isinstance(extra, str) else extra}: {problems}") from e

    @property
    def label(self) -> str:
        n = self.n
        added: List[str] = []
        for tag in self.extra:
            added.append({
                "t=0": "t",
                "t=1": "t-1",
                "add_w": f"w{n}",
                "kill_xin": "x_in",
                "kill_yni": "y_ni",
                "kill_v": "v",
                "det_t2": "det(X-t2)",
            }[tag])
        base = f"{_BASE_LABEL[self.family]}({n})"
        return base + (f"+({','.join(added)})" if added else "")


def matrix_names(prefix: str, n: int) -> List[str]:
    return [f"{prefix}{i}{j}" for i in range(1, n + 1) for j in range(1, n + 1)]


def vector_names(prefix: str, n: int) -> List[str]:
    return [f"{prefix}{i}" for i in range(1, n + 1)]


def family_variables(family: str, n: int) -> List[str]:
    names = matrix_names("x", n) + matrix_names("y", n)
    if family == "R_tilde":
        names += vector_names("u", n) + vector_names("v", n) + ["t1", "t2", "t"]
    elif family in ("R_prime", "R2"):
        names += vector_names("u", n) + vector_names("v", n) + vector_names("vp", n) + ["t1", "t2", "t3"]
    return names


def commutator_entries(n: int, field: CoefficientField) -> List[Polynomial]:
    """Entries of [X, Y] for generic n x n matrices, row-major."""
    ring = Ring.of(family_variables("R", n), field)
    return mx.entries(mx.commutator(mx.symbolic(ring, "x", n), mx.symbolic(ring, "y", n)))


def _raw_generators(family: str, n: int, ring: Ring) -> List[Polynomial]:
    X, Y = mx.symbolic(ring, "x", n), mx.symbolic(ring, "y", n)
    C = mx.commutator(X, Y)
    if family in ("R", "R1"):
        return mx.entries(C)
    u, v = mx.column(ring, "u", n), mx.row(ring, "v", n)
    t1, t2 = ring.var("t1"), ring.var("t2")
    if family == "R_tilde":
        t = ring.var("t")
        gens = mx.entries(mx.sub(C, mx.scale(mx.mul(u, v), t)))
        gens += mx.entries(mx.mul(mx.shift(X, t1), u))
        gens += mx.entries(mx.mul(v, mx.shift(Y, t2)))
        return gens
    vp, t3 = mx.row(ring, "vp", n), ring.var("t3")
    gens = mx.entries(mx.sub(C, mx.mul(u, v)))
    gens += mx.entries(mx.mul(mx.shift(X, t1), u))
    gens += mx.entries(mx.mul(v, mx.shift(X, t2)))
    gens += mx.entries(mx.mul(v, mx.shift(Y, t3)))
    gens += mx.entries(mx.mul(vp, mx.shift(Y, t3)))
    if family == "R2":
        gens.append(mx.det(ring, mx.shift(X, t2)))
    return gens


def build_ideal(spec: SchemeSpec, field: CoefficientField) -> IdealPresentation:
    """Presentation of the ring named by ``spec``.

    Generators follow the row-major matrix-entry expansion. Identically zero
    generators (such as the 1x1 commutator) are dropped.
    """
    n = spec.n
    family = spec.family
    tags = set(spec.extra)
    ring = Ring.of(family_variables(family, n), field)
    gens = list(_raw_generators(family, n, ring))
    if "det_t2" in tags:
        gens.append(mx.det(ring, mx.shift(mx.symbolic(ring, "x", n), ring.var("t2"))))
    I = IdealPresentation(vars=ring.vars, gens=tuple(gens), field=field, label=spec.label)

    killed: Dict[str, int] = {}
    if family == "R1" or "kill_xin" in tags:
        killed.update({f"x{i}{n}": 0 for i in range(1, n)})
    if "kill_yni" in tags:
        killed.update({f"y{n}{i}": 0 for i in range(1, n)})
    if "kill_v" in tags:
        killed.update({name: 0 for name in vector_names("v", n)})
    if "t=0" in tags:
        killed["t"] = 0
    if "t=1" in tags:
        killed["t"] = 1
    if killed:
        I = specialize(I, killed)
    if "add_w" in tags:
        w = Polynomial.zero(I.vars, field)
        for i in range(1, n + 1):
            if f"v{i}" in I.vars:
                w = w + I.var(f"u{i}") * I.var(f"v{i}")
        I = IdealPresentation(vars=I.vars, gens=I.gens + (w,), field=field, label=I.label)
    return IdealPresentation(vars=I.vars, gens=tuple(g for g in I.gens if g), field=field, label=spec.label)


def expected_dimension(spec: SchemeSpec) -> Optional[int]:
    """Dimension asserted for the presentation, when one is known."""
    n = spec.n
    tags = frozenset(spec.extra)
    table = {
        ("R", frozenset()): n * n + n,
        ("R1", frozenset()): n * n + 1,
        ("R1", frozenset({"kill_xin"})): n * n + 1,
        ("R", frozenset({"kill_xin"})): n * n + 1,
        ("R", frozenset({"kill_xin", "kill_yni"})): n * n - n + 2,
        ("R_tilde", frozenset({"t=0", "add_w"})): n * n + n + 2,
        ("R_tilde", frozenset({"t=0"})): n * n + n + 2,
        ("R_tilde", frozenset({"t=1"})): n * n + n + 2,
        ("R_tilde", frozenset({"add_w"})): n * n + n + 3,
        ("R_prime", frozenset({"kill_v"})): n * n + n + 3,
    }
    return table.get((spec.family, tags))


def check_dimension(
    spec: SchemeSpec,
    field: CoefficientField,
    order: Optional[MonomialOrder] = None,
    expected: Optional[int] = None,
    *,
    budget_s: Optional[float] = None,
    timing: bool = True,
) -> VerificationReport:
    order = order or MonomialOrder.grevlex()
    if expected is None:
        expected = expected_dimension(spec)
    if expected is None:
        raise PreconditionError(f"no known dimension for {spec.label}; pass an explicit expectation")
    I = build_ideal(spec, field)
    params = {
        "family": spec.family,
        "n": spec.n,
        "tags": list(spec.extra),
        "field": field.descriptor,
        "order": str(order),
        "expected": expected,
    }

    def body(deadline) -> CheckOutcome:
        G = I.groebner(order, deadline)
        if G.is_unit():
            return CheckOutcome(False, f"{I.label} is the unit ideal", [f"{I.label}: 1 in ideal"])
        dim = krull_dimension(I, order, deadline, basis=G)
        details = f"dim {I.label} = {dim} (expected {expected}; {len(I.vars)} variables, basis size {len(G)})"
        if dim == expected:
            return CheckOutcome(True, details)
        return CheckOutcome(False, details, [f"dimension {dim} != {expected}"])

    return run_check(f"dimension/{spec.label}", params, body, budget_s=budget_s, timing=timing)


def check_saturation_stable(
    n: int,
    field: CoefficientField,
    witness: str = "x11-x22",
    *,
    budget_s: Optional[float] = None,
    timing: bool = True,
) -> VerificationReport:
    """I(n) : f^inf has the same reduced basis as I(n); f defaults to x11 - x22."""
    I = build_ideal(SchemeSpec(family="R", n=n), field)
    params = {"n": n, "field": field.descriptor, "witness": witness}

    def body(deadline) -> CheckOutcome:
        f = I.parse(witness)
        S = saturate(I, f, deadline)
        G = I.groebner(MonomialOrder.grevlex(), deadline)
        same = ideal_equal(S, I, deadline=deadline)
        details = f"{S.label}: {len(S.gens)} generators, reduced basis of {I.label} has {len(G)}"
        if same:
            return CheckOutcome(True, details + "; bases agree")
        return CheckOutcome(False, details, [f"saturation by {witness} enlarges {I.label}"])

    return run_check(f"saturation/{I.label}", params, body, budget_s=budget_s, timing=timing)
