#!/usr/bin/env python3
"""Rational points: total assignments of field elements to a variable set."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

from .field import CoefficientField, Scalar
from .variables import PolynomialError, VariableSet


@dataclass(frozen=True)
class Point:
    vars: VariableSet
    field: CoefficientField
    values: Tuple[Scalar, ...]

    def __post_init__(self) -> None:
        if len(self.values) != len(self.vars):
            raise PolynomialError("point does not assign every variable", code="MISSING_ASSIGNMENT")

    @classmethod
    def from_mapping(cls, assignment: Mapping[str, Any], vars: VariableSet, field: CoefficientField) -> "Point":
        extra = [k for k in assignment if k not in vars]
        if extra:
            raise PolynomialError(f"assignment names unknown variables {extra}", code="UNKNOWN_VARIABLE")
        missing = [v for v in vars if v not in assignment]
        if missing:
            raise PolynomialError(f"no value for variables {missing}", code="MISSING_ASSIGNMENT")
        return cls(vars, field, tuple(field.convert(assignment[v]) for v in vars))

    def __getitem__(self, name: str) -> Scalar:
        return self.values[self.vars.index(name)]

    def as_dict(self) -> Dict[str, Scalar]:
        return dict(zip(self.vars.names, self.values))

    def replace(self, **changes: Any) -> "Point":
        d = self.as_dict()
        for k, v in changes.items():
            self.vars.index(k)
            d[k] = v
        return Point.from_mapping(d, self.vars, self.field)

    def values_for(self, vars: VariableSet, used: Sequence[str]) -> List[Optional[Scalar]]:
        """Values aligned with ``vars``; only the ``used`` names must be assigned here."""
        if vars == self.vars:
            return list(self.values)
        out: List[Optional[Scalar]] = [None] * len(vars)
        for name in used:
            if name not in self.vars:
                raise PolynomialError(f"point has no value for {name!r}", code="MISSING_ASSIGNMENT")
            out[vars.index(name)] = self[name]
        return out

    def describe(self) -> str:
        return ", ".join(f"{n}={self.field.format(v)}" for n, v in zip(self.vars.names, self.values))
