#!/usr/bin/env python3
"""Ideal presentations: a variable set, a generator list, a field and a label."""

from __future__ import annotations

from typing import Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, ConfigDict, constr, model_validator

from groebner.buchberger import GroebnerBasis, buchberger
from polycore.field import CoefficientField, Scalar
from polycore.monomials import MonomialOrder
from polycore.parser import parse_polynomial
from polycore.polynomial import Polynomial, format_polynomial
from polycore.variables import PolynomialError, VariableSet
from utils.budget import Deadline


class IdealPresentation(BaseModel):
    """Generators of an ideal in a named polynomial ring."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True, extra="forbid")

    vars: VariableSet
    gens: Tuple[Polynomial, ...]
    field: CoefficientField
    label: constr(strip_whitespace=True, min_length=1)

    @model_validator(mode="after")
    def _generators_live_on_ring(self) -> "IdealPresentation":
        for i, g in enumerate(self.gens):
            if g.vars != self.vars:
                raise ValueError(f"generator {i} lives on {g.vars.names}, expected {self.vars.names}")
            if g.field != self.field:
                raise ValueError(f"generator {i} lives over {g.field}, expected {self.field}")
        return self

    @classmethod
    def from_strings(cls, names: Sequence[str], gens: Iterable[str], field: CoefficientField, label: str) -> "IdealPresentation":
        vars = VariableSet(tuple(names))
        return cls(vars=vars, gens=tuple(parse_polynomial(g, vars, field) for g in gens), field=field, label=label)

    def var(self, name: str) -> Polynomial:
        return Polynomial.variable(name, self.vars, self.field)

    def const(self, c: Union[int, str, Scalar]) -> Polynomial:
        return Polynomial.constant(c, self.vars, self.field)

    def parse(self, text: str) -> Polynomial:
        return parse_polynomial(text, self.vars, self.field)

    def nonzero_gens(self) -> List[Polynomial]:
        return [g for g in self.gens if g]

    def relabel(self, label: str) -> "IdealPresentation":
        return self.model_copy(update={"label": label})

    def groebner(self, order: Optional[MonomialOrder] = None, deadline: Optional[Deadline] = None) -> GroebnerBasis:
        return buchberger(self.gens, order or MonomialOrder.grevlex(), vars=self.vars, field=self.field, deadline=deadline)

    def lines(self, order: Optional[MonomialOrder] = None) -> List[str]:
        return [format_polynomial(g, order) for g in self.gens]

    def to_text(self) -> str:
        """Serialize in the ideal file format."""
        out = [f"# {self.label}", f"vars: {' '.join(self.vars.names)}", f"field: {self.field.descriptor}"]
        out.extend(self.lines())
        return "\n".join(out) + "\n"


def ideal_add(I: IdealPresentation, polys: Sequence[Polynomial], label: Optional[str] = None) -> IdealPresentation:
    return IdealPresentation(vars=I.vars, gens=I.gens + tuple(polys), field=I.field, label=label or I.label)


def extend_ring(I: IdealPresentation, names: Sequence[str], label: Optional[str] = None) -> IdealPresentation:
    """Same generators in a ring with extra variables appended."""
    vars = I.vars.extend(names)
    return IdealPresentation(vars=vars, gens=tuple(g.rebase(vars) for g in I.gens), field=I.field, label=label or I.label)


def localize(I: IdealPresentation, w: Polynomial, label: Optional[str] = None) -> Tuple[IdealPresentation, str]:
    """Adjoin an inverse of ``w``: a fresh z{k} with generator z*w - 1."""
    if w.is_zero():
        raise PolynomialError("cannot invert the zero polynomial", code="ZERO_INPUT")
    if w.vars != I.vars or w.field != I.field:
        raise PolynomialError("witness does not live on the ring of the ideal", code="MISMATCH")
    z = I.vars.fresh_aux()
    big = extend_ring(I, [z])
    zw = Polynomial.variable(z, big.vars, I.field) * w.rebase(big.vars) - 1
    return ideal_add(big, [zw], label or f"{I.label}[1/({w})]"), z


def specialize(I: IdealPresentation, assignment: Mapping[str, Union[int, str, Scalar]], label: Optional[str] = None) -> IdealPresentation:
    """Substitute constants for variables and drop them from the ring."""
    target = I.vars.without(assignment.keys())
    images = {}
    for name in I.vars:
        if name in assignment:
            images[name] = Polynomial.constant(assignment[name], target, I.field)
        else:
            images[name] = Polynomial.variable(name, target, I.field)
    gens = tuple(g.substitute(images, target) for g in I.gens)
    return IdealPresentation(vars=target, gens=gens, field=I.field, label=label or I.label)


def ideal_equal(I: IdealPresentation, J: IdealPresentation, order: Optional[MonomialOrder] = None, deadline: Optional[Deadline] = None) -> bool:
    if I.vars != J.vars or I.field != J.field:
        return False
    order = order or MonomialOrder.grevlex()
    return set(I.groebner(order, deadline).generators) == set(J.groebner(order, deadline).generators)
