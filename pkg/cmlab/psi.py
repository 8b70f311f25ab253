#!/usr/bin/env python3
"""Seeded sampler for the parametrized components of CV(m).

psi_{m,m1,m2} sends (g, a_0..a_{m-m1}, b_0..b_{m-m2}, alpha, beta) to

    A     = g diag(a_0 I_{m1}, a_1, ..., a_{m-m1}) g^-1
    B     = g diag(b_1, ..., b_{m-m2}, b_0 I_{m2}) g^-1
    alpha = g (alpha, 0)^t
    beta  = (0, beta) g^-1
    a, b  = a_0, b_0

with g invertible and each eigenvalue tuple pairwise distinct.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence

import numpy as np

from configs.config import Config
from idealops.jacobian import jacobian_rank
from polycore import linalg
from polycore.field import CoefficientField, FieldError, Scalar
from polycore.point import Point
from polycore.variables import VariableSet

from .points import cv_variables, validate_triple, vanishing_failures
from .reports import CheckOutcome, VerificationReport, run_check
from .schemes import SchemeSpec, build_ideal, expected_dimension

logger = logging.getLogger(__name__)


class SamplingError(Exception):
    """Raised when the sampler cannot produce a valid draw."""
    def __init__(self, message: str, code: str = "SAMPLING") -> None:
        super().__init__(message)
        self.code = code


@dataclass(frozen=True)
class CVTuple:
    """A closed point (A, B, alpha, beta, a, b) of CV(m)."""

    A: List[List[Scalar]]
    B: List[List[Scalar]]
    alpha: List[Scalar]
    beta: List[Scalar]
    a: Scalar
    b: Scalar
    field: CoefficientField

    @property
    def m(self) -> int:
        return len(self.A)

    def violations(self) -> List[str]:
        """Defining equations of CV(m) that fail; empty on a valid tuple."""
        F = self.field
        m = self.m
        col = [[x] for x in self.alpha]
        row = [list(self.beta)]
        out = []
        AB = linalg.matmul(self.A, self.B, F)
        BA = linalg.matmul(self.B, self.A, F)
        if AB != BA:
            out.append("AB != BA")
        Aa = linalg.matmul(self.A, col, F)
        if any(Aa[i][0] != F.mul(self.a, self.alpha[i]) for i in range(m)):
            out.append("A*alpha != a*alpha")
        bB = linalg.matmul(row, self.B, F)
        if any(bB[0][j] != F.mul(self.b, self.beta[j]) for j in range(m)):
            out.append("beta*B != b*beta")
        if linalg.matmul(row, col, F)[0][0] != F.zero:
            out.append("beta*alpha != 0")
        return out

    def to_point(self) -> Point:
        """Flatten onto the variables of J(m)+(t, w_m)."""
        m = self.m
        values: Dict[str, Scalar] = {}
        for i in range(m):
            for j in range(m):
                values[f"x{i + 1}{j + 1}"] = self.A[i][j]
                values[f"y{i + 1}{j + 1}"] = self.B[i][j]
            values[f"u{i + 1}"] = self.alpha[i]
            values[f"v{i + 1}"] = self.beta[i]
        values["t1"] = self.a
        values["t2"] = self.b
        return Point.from_mapping(values, VariableSet(tuple(cv_variables(m))), self.field)


def _distinct_tuple(rng: np.random.Generator, count: int, field: CoefficientField, bound: int, retries: int) -> List[Scalar]:
    for _ in range(retries):
        draw = [field.random_element(rng, bound) for _ in range(count)]
        if len(set(draw)) == count:
            return draw
    raise SamplingError(f"no pairwise-distinct {count}-tuple after {retries} draws")


def _invertible(rng: np.random.Generator, m: int, field: CoefficientField, bound: int, retries: int):
    for attempt in range(retries):
        g = [[field.random_element(rng, bound) for _ in range(m)] for _ in range(m)]
        try:
            return g, linalg.inverse(g, field)
        except FieldError:
            logger.debug("singular g on draw %d, resampling", attempt + 1)
    raise SamplingError(f"no invertible {m}x{m} matrix after {retries} draws")


def _diag(values: Sequence[Scalar], field: CoefficientField) -> List[List[Scalar]]:
    n = len(values)
    return [[values[i] if i == j else field.zero for j in range(n)] for i in range(n)]


def psi_draw(
    m: int,
    m1: int,
    m2: int,
    rng: np.random.Generator,
    field: CoefficientField,
    max_retries: Optional[int] = None,
    bound: Optional[int] = None,
) -> CVTuple:
    validate_triple(m, m1, m2)
    if field.is_prime and field.characteristic <= 4 * m:
        raise SamplingError(f"F_{field.characteristic} is too small for distinct eigenvalues at m={m} (need p > {4 * m})")
    cfg = Config.get_sampling_config()
    retries = max_retries if max_retries is not None else cfg["max_retries"]
    bound = bound if bound is not None else cfg["rational_range"]

    g, g_inv = _invertible(rng, m, field, bound, retries)
    a = _distinct_tuple(rng, m - m1 + 1, field, bound, retries)
    b = _distinct_tuple(rng, m - m2 + 1, field, bound, retries)
    alpha = [field.random_element(rng, bound) for _ in range(m1)]
    beta = [field.random_element(rng, bound) for _ in range(m2)]

    DA = _diag([a[0]] * m1 + a[1:], field)
    DB = _diag(b[1:] + [b[0]] * m2, field)
    A = linalg.matmul(linalg.matmul(g, DA, field), g_inv, field)
    B = linalg.matmul(linalg.matmul(g, DB, field), g_inv, field)
    col = [[x] for x in alpha + [field.zero] * (m - m1)]
    row = [[field.zero] * (m - m2) + beta]
    alpha_full = [r[0] for r in linalg.matmul(g, col, field)]
    beta_full = linalg.matmul(row, g_inv, field)[0]
    return CVTuple(A=A, B=B, alpha=alpha_full, beta=beta_full, a=a[0], b=b[0], field=field)


def psi_sample(m: int, m1: int, m2: int, seed: int, field: CoefficientField, **kwargs: Any) -> CVTuple:
    """One seeded draw; the same seed always yields the same tuple."""
    if seed < 0:
        raise SamplingError(f"seed must be nonnegative, got {seed}")
    return psi_draw(m, m1, m2, np.random.default_rng(seed), field, **kwargs)


def _cv_ideal(m: int, field: CoefficientField):
    return build_ideal(SchemeSpec(family="R_tilde", n=m, extra=("t=0", "add_w")), field)


def check_psi_membership(
    m: int,
    m1: int,
    m2: int,
    field: CoefficientField,
    *,
    samples: Optional[int] = None,
    seed: int = 0,
    budget_s: Optional[float] = None,
    timing: bool = True,
) -> VerificationReport:
    """Every generator of J(m)+(t, w_m) vanishes at every sample."""
    validate_triple(m, m1, m2)
    samples = Config.PSI_SAMPLES if samples is None else samples
    I = _cv_ideal(m, field)
    params = {"m": m, "m1": m1, "m2": m2, "field": field.descriptor, "samples": samples, "seed": seed}

    def body(deadline) -> CheckOutcome:
        rng = np.random.default_rng(seed)
        offending: List[str] = []
        for k in range(samples):
            deadline.check("psi sampling")
            sample = psi_draw(m, m1, m2, rng, field)
            bad = sample.violations() + vanishing_failures(list(I.gens), sample.to_point())
            offending += [f"sample {k}: {msg}" for msg in bad]
        details = f"{samples} samples of psi_{m},{m1},{m2} checked against {len(I.gens)} generators"
        if offending:
            return CheckOutcome(False, details, offending[:10])
        return CheckOutcome(True, details)

    return run_check(f"psi-membership/m={m}/m1={m1}/m2={m2}", params, body, budget_s=budget_s, timing=timing)


def check_tangent_bound(
    m: int,
    m1: int,
    m2: int,
    field: CoefficientField,
    *,
    samples: int = 10,
    seed: int = 0,
    budget_s: Optional[float] = None,
    timing: bool = True,
) -> VerificationReport:
    """Jacobian rank at psi samples never exceeds #vars - dim(J(m)+(t, w_m))."""
    validate_triple(m, m1, m2)
    spec = SchemeSpec(family="R_tilde", n=m, extra=("t=0", "add_w"))
    I = build_ideal(spec, field)
    bound = len(I.vars) - expected_dimension(spec)
    params = {"m": m, "m1": m1, "m2": m2, "field": field.descriptor, "samples": samples, "seed": seed, "bound": bound}

    def body(deadline) -> CheckOutcome:
        rng = np.random.default_rng(seed)
        ranks = []
        for _ in range(samples):
            deadline.check("tangent bound")
            ranks.append(jacobian_rank(list(I.gens), psi_draw(m, m1, m2, rng, field).to_point()))
        details = f"ranks {sorted(set(ranks))} against bound {bound}"
        over = [f"sample {k}: rank {r} > {bound}" for k, r in enumerate(ranks) if r > bound]
        return CheckOutcome(not over, details, over)

    return run_check(f"tangent-bound/m={m}/m1={m1}/m2={m2}", params, body, budget_s=budget_s, timing=timing)
