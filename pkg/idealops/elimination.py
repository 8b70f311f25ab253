#!/usr/bin/env python3
"""Elimination, saturation and radical membership.

Saturation and radical membership use one auxiliary variable z{k} appended
after the existing variables; nested calls pick the next free k.
"""

from __future__ import annotations

import logging
from typing import Iterable, Optional

from groebner.buchberger import buchberger
from polycore.monomials import MonomialOrder
from polycore.polynomial import Polynomial
from polycore.variables import PolynomialError
from utils.budget import Deadline

from .presentation import IdealPresentation, extend_ring, ideal_add

logger = logging.getLogger(__name__)


def eliminate(I: IdealPresentation, drop: Iterable[str], deadline: Optional[Deadline] = None, inner: Optional[MonomialOrder] = None) -> IdealPresentation:
    """Generators of I intersected with the subring free of ``drop``.

    Uses a block order with ``drop`` in front; the surviving basis elements
    form a reduced basis of the elimination ideal under ``inner``.
    """
    requested = set(drop)
    unknown = requested - set(I.vars)
    if unknown:
        raise PolynomialError(f"cannot eliminate unknown variables {sorted(unknown)}", code="UNKNOWN_VARIABLE")
    drop = [v for v in I.vars if v in requested]
    inner = inner or MonomialOrder.grevlex()
    if not drop:
        G = buchberger(I.gens, inner, vars=I.vars, field=I.field, deadline=deadline)
        return IdealPresentation(vars=I.vars, gens=G.generators, field=I.field, label=I.label)
    order = MonomialOrder.block(drop, inner)
    G = buchberger(I.gens, order, vars=I.vars, field=I.field, deadline=deadline)
    drop_idx = [I.vars.index(v) for v in drop]
    kept = [g for g in G if all(m[i] == 0 for m in g for i in drop_idx)]
    target = I.vars.without(drop)
    logger.debug("eliminated %s from %s: %d of %d basis elements survive", drop, I.label, len(kept), len(G))
    return IdealPresentation(
        vars=target,
        gens=tuple(g.rebase(target) for g in kept),
        field=I.field,
        label=f"{I.label} & k[{','.join(target.names)}]",
    )


def saturate(I: IdealPresentation, f: Polynomial, deadline: Optional[Deadline] = None) -> IdealPresentation:
    """I : f^inf via eliminate(I + <1 - z*f>, {z})."""
    if f.is_zero():
        raise PolynomialError("cannot saturate by the zero polynomial", code="ZERO_INPUT")
    if f.vars != I.vars or f.field != I.field:
        raise PolynomialError("saturating polynomial does not live on the ring of the ideal", code="MISMATCH")
    z = I.vars.fresh_aux()
    big = extend_ring(I, [z])
    zf = Polynomial.variable(z, big.vars, I.field) * f.rebase(big.vars)
    J = ideal_add(big, [1 - zf])
    out = eliminate(J, [z], deadline)
    return out.relabel(f"{I.label}:({f})^inf")


def radical_membership(f: Polynomial, I: IdealPresentation, deadline: Optional[Deadline] = None) -> bool:
    """True iff some power of ``f`` lies in I, i.e. 1 is in I + <1 - z*f>."""
    if f.vars != I.vars or f.field != I.field:
        raise PolynomialError("polynomial does not live on the ring of the ideal", code="MISMATCH")
    z = I.vars.fresh_aux()
    big = extend_ring(I, [z])
    zf = Polynomial.variable(z, big.vars, I.field) * f.rebase(big.vars)
    G = buchberger(big.gens + (1 - zf,), MonomialOrder.grevlex(), vars=big.vars, field=I.field, deadline=deadline)
    return G.is_unit()
