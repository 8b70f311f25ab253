#!/usr/bin/env python3
"""Multivariate division: full reduction to normal form and S-polynomials."""

from __future__ import annotations

import heapq
from typing import Dict, List, Optional, Sequence, Tuple

from configs.config import Config
from polycore.field import Scalar
from polycore.monomials import MonomialOrder
from polycore.polynomial import Polynomial
from polycore.variables import Monomial, PolynomialError, mono_divides, mono_lcm
from utils.budget import Deadline


def _check_shared(f: Polynomial, G: Sequence[Polynomial]) -> None:
    for g in G:
        if g.vars != f.vars:
            raise PolynomialError(f"variable sets differ: {f.vars.names} vs {g.vars.names}", code="MISMATCH")
        if g.field != f.field:
            raise PolynomialError(f"fields differ: {f.field} vs {g.field}", code="MISMATCH")


class Reducer:
    """Reduces polynomials modulo a growing list of divisors.

    Each divisor is stored as (leading monomial, inverse leading coefficient,
    tail terms). Divisors are tried in insertion order, which keeps
    reductions deterministic.
    """

    def __init__(self, order: MonomialOrder, vars, field, deadline: Optional[Deadline] = None) -> None:
        self.order = order
        self.vars = vars
        self.field = field
        self.key = order.key(vars)
        self.deadline = deadline
        self.poll = max(1, Config.GB_DEADLINE_POLL)
        self.divisors: List[Tuple[Monomial, Scalar, List[Tuple[Monomial, Scalar]]]] = []
        self.steps = 0

    def add(self, g: Polynomial) -> None:
        if g.is_zero():
            return
        lm, lc = g.leading_term(self.order)
        tail = [(m, c) for m, c in g.items() if m != lm]
        self.divisors.append((lm, self.field.inv(lc), tail))

    def extend(self, G: Sequence[Polynomial]) -> None:
        for g in G:
            self.add(g)

    def reduce(self, f: Polynomial, skip: Optional[int] = None) -> Polynomial:
        """Full normal form of ``f``; ``skip`` excludes one divisor by position."""
        field = self.field
        mod = field.characteristic if field.is_prime else 0
        key = self.key
        divisors = self.divisors if skip is None else self.divisors[:skip] + self.divisors[skip + 1:]
        p: Dict[Monomial, Scalar] = f.terms()
        heap = [(tuple(-k for k in key(m)), m) for m in p]
        heapq.heapify(heap)
        rem: Dict[Monomial, Scalar] = {}
        while heap:
            _, mono = heapq.heappop(heap)
            c = p.pop(mono, None)
            if c is None:
                continue
            self.steps += 1
            if self.deadline is not None and self.steps % self.poll == 0:
                self.deadline.check("reduction")
            div = None
            for d in divisors:
                if mono_divides(d[0], mono):
                    div = d
                    break
            if div is None:
                rem[mono] = c
                continue
            lm, lc_inv, tail = div
            q = tuple(a - b for a, b in zip(mono, lm))
            coef = c * lc_inv
            if mod:
                coef %= mod
            for tm, tc in tail:
                m2 = tuple(a + b for a, b in zip(tm, q))
                old = p.get(m2)
                if old is None:
                    v = -coef * tc
                    if mod:
                        v %= mod
                    if v != 0:
                        p[m2] = v
                        heapq.heappush(heap, (tuple(-k for k in key(m2)), m2))
                else:
                    v = old - coef * tc
                    if mod:
                        v %= mod
                    if v == 0:
                        del p[m2]
                    else:
                        p[m2] = v
        return Polynomial(rem, self.vars, field, _trusted=True)


def normal_form(f: Polynomial, G: Sequence[Polynomial], order: MonomialOrder, deadline: Optional[Deadline] = None) -> Polynomial:
    """Remainder of ``f`` on division by ``G``; no term of it is divisible by a leading term of ``G``."""
    if len(f.vars) == 0:
        raise PolynomialError("normal form needs a nonempty variable set", code="EMPTY_VARIABLES")
    G = list(G)
    _check_shared(f, G)
    reducer = Reducer(order, f.vars, f.field, deadline)
    reducer.extend(G)
    return reducer.reduce(f)


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    if f.is_zero() or g.is_zero():
        raise PolynomialError("S-polynomial of a zero polynomial", code="ZERO_INPUT")
    _check_shared(f, [g])
    field = f.field
    lm_f, lc_f = f.leading_term(order)
    lm_g, lc_g = g.leading_term(order)
    lcm = mono_lcm(lm_f, lm_g)
    left = f.mul_term(tuple(a - b for a, b in zip(lcm, lm_f)), field.inv(lc_f))
    right = g.mul_term(tuple(a - b for a, b in zip(lcm, lm_g)), field.inv(lc_g))
    return left - right
