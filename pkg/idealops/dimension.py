#!/usr/bin/env python3
"""Krull dimension from the leading-term ideal.

The dimension of k[x]/I equals the largest set S of variables such that no
leading monomial of a Groebner basis is supported inside S. Equivalently,
n minus the size of a smallest variable set meeting every support; that
transversal is found by exact branch and bound.
"""

from __future__ import annotations

import logging
from typing import FrozenSet, List, Optional, Sequence, Tuple

from groebner.buchberger import GroebnerBasis
from polycore.monomials import MonomialOrder
from polycore.variables import Monomial, mono_support
from utils.budget import Deadline

from .presentation import IdealPresentation

logger = logging.getLogger(__name__)


class UnitIdealError(Exception):
    """The ideal is the whole ring; its dimension is undefined."""
    def __init__(self, message: str, code: str = "UNIT_IDEAL") -> None:
        super().__init__(message)
        self.code = code


def _minimal_supports(lms: Sequence[Monomial]) -> List[FrozenSet[int]]:
    supports = sorted({frozenset(mono_support(m)) for m in lms}, key=lambda s: (len(s), sorted(s)))
    minimal: List[FrozenSet[int]] = []
    for s in supports:
        if not any(t <= s for t in minimal):
            minimal.append(s)
    return minimal


def minimal_transversal(supports: Sequence[FrozenSet[int]], nvars: int, deadline: Optional[Deadline] = None) -> FrozenSet[int]:
    """Smallest variable set meeting every support (exact search)."""
    forced = frozenset(next(iter(s)) for s in supports if len(s) == 1)
    rest = [s for s in supports if not (s & forced)]
    best: List[FrozenSet[int]] = [frozenset(range(nvars))]

    def search(chosen: FrozenSet[int]) -> None:
        if deadline is not None:
            deadline.check("dimension search")
        if len(chosen) >= len(best[0]):
            return
        for s in rest:
            if not (s & chosen):
                break
        else:
            best[0] = chosen
            return
        # at least one more variable is needed
        if len(chosen) + 1 >= len(best[0]):
            return
        for v in sorted(s):
            search(chosen | {v})

    search(forced)
    return best[0]


def dimension_of_leading_ideal(lms: Sequence[Monomial], nvars: int, deadline: Optional[Deadline] = None) -> Tuple[int, Tuple[int, ...]]:
    """Dimension and one maximal independent set (as variable indices)."""
    supports = _minimal_supports(lms)
    if any(not s for s in supports):
        raise UnitIdealError("leading ideal contains 1")
    hit = minimal_transversal(supports, nvars, deadline) if supports else frozenset()
    independent = tuple(i for i in range(nvars) if i not in hit)
    return len(independent), independent


def krull_dimension(I: IdealPresentation, order: Optional[MonomialOrder] = None, deadline: Optional[Deadline] = None, basis: Optional[GroebnerBasis] = None) -> int:
    """Krull dimension of the quotient ring k[vars]/I.

    Raises:
        UnitIdealError: when 1 is in I.
        BudgetExceeded: when the deadline passes.
    """
    order = order or MonomialOrder.grevlex()
    G = basis if basis is not None else I.groebner(order, deadline)
    if G.is_unit():
        raise UnitIdealError(f"{I.label} is the unit ideal")
    dim, independent = dimension_of_leading_ideal(G.leading_monomials(), len(I.vars), deadline)
    logger.debug("dim %s = %d, independent set %s", I.label, dim, [I.vars.names[i] for i in independent])
    return dim


def independent_variables(I: IdealPresentation, order: Optional[MonomialOrder] = None, deadline: Optional[Deadline] = None) -> List[str]:
    G = I.groebner(order or MonomialOrder.grevlex(), deadline)
    if G.is_unit():
        raise UnitIdealError(f"{I.label} is the unit ideal")
    _, independent = dimension_of_leading_ideal(G.leading_monomials(), len(I.vars), deadline)
    return [I.vars.names[i] for i in independent]
