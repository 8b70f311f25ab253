#!/usr/bin/env python3
"""Reduced Groebner bases by Buchberger's algorithm.

Pairs are pruned with the Gebauer-Moeller criteria and selected by the
normal strategy (smallest lcm first) or, behind a flag, by sugar degree.
All tie-breaks fall back to generator indices, so the output is a
deterministic function of the input list and the order.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field as dc_field
from itertools import combinations
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from configs.config import Config
from polycore.field import CoefficientField
from polycore.monomials import MonomialOrder
from polycore.polynomial import Polynomial, format_polynomial
from polycore.variables import Monomial, PolynomialError, VariableSet, mono_coprime, mono_divides, mono_lcm
from utils.budget import Deadline
from utils.metrics import Timer, incr

from .division import Reducer, normal_form, s_polynomial

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]


@dataclass(frozen=True)
class GroebnerBasis:
    generators: Tuple[Polynomial, ...]
    order: MonomialOrder
    vars: VariableSet
    field: CoefficientField
    reduced: bool = True
    stats: Dict[str, int] = dc_field(default_factory=dict, compare=False, hash=False)

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self) -> Iterator[Polynomial]:
        return iter(self.generators)

    def leading_monomials(self) -> List[Monomial]:
        return [g.leading_monomial(self.order) for g in self.generators]

    def is_unit(self) -> bool:
        return len(self.generators) == 1 and self.generators[0].is_constant() and not self.generators[0].is_zero()

    def is_zero_ideal(self) -> bool:
        return not self.generators

    def normal_form(self, f: Polynomial, deadline: Optional[Deadline] = None) -> Polynomial:
        return normal_form(f, self.generators, self.order, deadline)

    def contains(self, f: Polynomial) -> bool:
        return ideal_membership(f, self)

    def lines(self) -> List[str]:
        return [format_polynomial(g, self.order) for g in self.generators]


def _shared_ring(gens: Sequence[Polynomial], vars: Optional[VariableSet], field: Optional[CoefficientField]) -> Tuple[VariableSet, CoefficientField]:
    if gens:
        vars = vars or gens[0].vars
        field = field or gens[0].field
    if vars is None or field is None:
        raise PolynomialError("an empty generator list needs an explicit variable set and field", code="MISMATCH")
    for g in gens:
        if g.vars != vars or g.field != field:
            raise PolynomialError("generators do not share a variable set and field", code="MISMATCH")
    return vars, field


def _interreduce_initial(gens: List[Polynomial], order: MonomialOrder, deadline: Optional[Deadline]) -> List[Polynomial]:
    current = [g.monic(order) for g in gens]
    while True:
        nxt: List[Polynomial] = []
        for i, p in enumerate(current):
            reducer = Reducer(order, p.vars, p.field, deadline)
            reducer.extend(current[:i])
            r = reducer.reduce(p)
            if r:
                nxt.append(r.monic(order))
        if nxt == current:
            return nxt
        current = nxt


class _Engine:
    def __init__(self, polys: List[Polynomial], order: MonomialOrder, selection: str, deadline: Optional[Deadline]) -> None:
        self.order = order
        self.vars = polys[0].vars
        self.field = polys[0].field
        self.key = order.key(self.vars)
        self.selection = selection
        self.deadline = deadline
        self.polys: List[Polynomial] = []
        self.lms: List[Monomial] = []
        self.sugar: List[int] = []
        self.prepared: Dict[int, tuple] = {}
        self.pairs_processed = 0
        self.zero_reductions = 0
        for p in polys:
            self._append(p, p.total_degree())

    def _append(self, p: Polynomial, sugar: int) -> int:
        idx = len(self.polys)
        self.polys.append(p)
        self.lms.append(p.leading_monomial(self.order))
        self.sugar.append(sugar)
        tmp = Reducer(self.order, self.vars, self.field)
        tmp.add(p)
        self.prepared[idx] = tmp.divisors[0]
        return idx

    def _pair_key(self, pair: Pair) -> tuple:
        i, j = pair
        lcm = mono_lcm(self.lms[i], self.lms[j])
        deg = sum(lcm)
        lo, hi = min(i, j), max(i, j)
        if self.selection == "sugar":
            s = max(self.sugar[i] + deg - sum(self.lms[i]), self.sugar[j] + deg - sum(self.lms[j]))
            return (s, deg, self.key(lcm), lo, hi)
        return (deg, self.key(lcm), lo, hi)

    def _pair_sugar(self, pair: Pair) -> int:
        i, j = pair
        deg = sum(mono_lcm(self.lms[i], self.lms[j]))
        return max(self.sugar[i] + deg - sum(self.lms[i]), self.sugar[j] + deg - sum(self.lms[j]))

    def update(self, G: List[int], CP: Dict[Pair, tuple], ih: int) -> Tuple[List[int], Dict[Pair, tuple]]:
        lms = self.lms
        mh = lms[ih]
        C = list(G)
        D: List[Pair] = []
        while C:
            ig = C.pop()
            mg = lms[ig]
            lcm_hg = mono_lcm(mh, mg)

            def lcm_divides(ip: int) -> bool:
                return mono_divides(mono_lcm(mh, lms[ip]), lcm_hg)

            if mono_coprime(mh, mg) or (
                not any(lcm_divides(ipx) for ipx in C) and not any(lcm_divides(pr[1]) for pr in D)
            ):
                D.append((ih, ig))
        E = [pr for pr in D if not mono_coprime(mh, lms[pr[1]])]
        kept: Dict[Pair, tuple] = {}
        for (i1, i2), k in CP.items():
            m1, m2 = lms[i1], lms[i2]
            lcm12 = mono_lcm(m1, m2)
            if not mono_divides(mh, lcm12) or mono_lcm(m1, mh) == lcm12 or mono_lcm(m2, mh) == lcm12:
                kept[(i1, i2)] = k
        for pr in E:
            kept[pr] = self._pair_key(pr)
        new_G = [ig for ig in G if not mono_divides(mh, lms[ig])]
        new_G.append(ih)
        return new_G, kept

    def _reducer_for(self, indices: Sequence[int]) -> Reducer:
        r = Reducer(self.order, self.vars, self.field, self.deadline)
        r.divisors = [self.prepared[i] for i in indices]
        return r

    def run(self) -> Optional[List[Polynomial]]:
        """Returns the reduced basis, or None when the ideal is the unit ideal."""
        G: List[int] = []
        CP: Dict[Pair, tuple] = {}
        for ih in sorted(range(len(self.polys)), key=lambda i: (self.key(self.lms[i]), i)):
            G, CP = self.update(G, CP, ih)
        while CP:
            if self.deadline is not None:
                self.deadline.check("pair selection")
            pair = min(CP, key=CP.__getitem__)
            del CP[pair]
            self.pairs_processed += 1
            h = s_polynomial(self.polys[pair[0]], self.polys[pair[1]], self.order)
            ordered = sorted(G, key=lambda i: (self.key(self.lms[i]), i))
            h = self._reducer_for(ordered).reduce(h)
            if h.is_zero():
                self.zero_reductions += 1
                continue
            h = h.monic(self.order)
            if h.is_constant():
                return None
            ih = self._append(h, self._pair_sugar(pair))
            G, CP = self.update(G, CP, ih)
            logger.debug("basis grew to %d elements, %d pairs pending", len(G), len(CP))
        final: List[Polynomial] = []
        for ig in G:
            others = [i for i in G if i != ig]
            r = self._reducer_for(others).reduce(self.polys[ig])
            if r:
                final.append(r.monic(self.order))
        final.sort(key=lambda g: self.key(g.leading_monomial(self.order)), reverse=True)
        return final


def buchberger(
    gens: Sequence[Polynomial],
    order: MonomialOrder,
    *,
    vars: Optional[VariableSet] = None,
    field: Optional[CoefficientField] = None,
    selection: Optional[str] = None,
    deadline: Optional[Deadline] = None,
) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``.

    Args:
        gens: generators sharing one variable set and field (zeros allowed).
        order: the monomial order.
        vars, field: required only when ``gens`` is empty.
        selection: "normal" or "sugar"; defaults to Config.GB_SELECTION.
        deadline: polled between pairs and during reductions.

    Returns:
        GroebnerBasis sorted by leading monomial, descending.

    Raises:
        BudgetExceeded: when the deadline passes.
    """
    gens = list(gens)
    vars, field = _shared_ring(gens, vars, field)
    selection = selection or Config.GB_SELECTION
    if selection not in ("normal", "sugar"):
        raise PolynomialError(f"unknown selection strategy {selection!r}", code="BAD_STRATEGY")
    nonzero = [g for g in gens if g]
    if not nonzero:
        return GroebnerBasis((), order, vars, field, True, {"pairs": 0, "zero_reductions": 0})
    with Timer("groebner.buchberger", order=str(order), field=field.descriptor, nvars=len(vars)):
        if deadline is not None:
            deadline.check("setup")
        initial = _interreduce_initial(nonzero, order, deadline)
        one = Polynomial.constant(1, vars, field)
        if any(p.is_constant() for p in initial):
            return GroebnerBasis((one,), order, vars, field, True, {"pairs": 0, "zero_reductions": 0})
        engine = _Engine(initial, order, selection, deadline)
        result = engine.run()
    stats = {"pairs": engine.pairs_processed, "zero_reductions": engine.zero_reductions}
    incr("groebner.pairs", engine.pairs_processed, order=str(order))
    incr("groebner.zero_reductions", engine.zero_reductions, order=str(order))
    if result is None:
        logger.debug("unit ideal detected after %d pairs", engine.pairs_processed)
        return GroebnerBasis((one,), order, vars, field, True, stats)
    incr("groebner.basis_size", len(result), order=str(order))
    logger.debug("reduced basis with %d elements (%d pairs, %d zero reductions)", len(result), stats["pairs"], stats["zero_reductions"])
    return GroebnerBasis(tuple(result), order, vars, field, True, stats)


def ideal_membership(f: Polynomial, I: GroebnerBasis) -> bool:
    """True iff ``f`` reduces to zero modulo the reduced basis ``I``."""
    if f.vars != I.vars or f.field != I.field:
        raise PolynomialError("polynomial and basis live on different rings", code="MISMATCH")
    if f.is_zero():
        return True
    if not I.generators:
        return False
    return normal_form(f, I.generators, I.order).is_zero()


def is_groebner(G: Sequence[Polynomial], order: MonomialOrder, deadline: Optional[Deadline] = None) -> bool:
    """Buchberger criterion: every S-polynomial reduces to zero."""
    G = [g for g in G if g]
    for f, g in combinations(G, 2):
        if not normal_form(s_polynomial(f, g, order), G, order, deadline).is_zero():
            return False
    return True
