#!/usr/bin/env python3
"""Monomial orders: lex, grevlex and block (elimination) orders.

Orders are turned into sort keys over exponent tuples so that comparisons in
the Groebner hot loop are plain tuple comparisons.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Callable, Literal, Optional, Sequence, Tuple

from .variables import Monomial, PolynomialError, VariableSet

OrderKind = Literal["lex", "grevlex", "block"]
SortKey = Callable[[Monomial], tuple]


class Comparison(str, Enum):
    LT = "LT"
    EQ = "EQ"
    GT = "GT"


@dataclass(frozen=True)
class MonomialOrder:
    kind: OrderKind
    front: Tuple[str, ...] = ()
    inner: Optional["MonomialOrder"] = None

    def __post_init__(self) -> None:
        if self.kind not in ("lex", "grevlex", "block"):
            raise PolynomialError(f"unknown monomial order {self.kind!r}", code="BAD_ORDER")
        if self.kind == "block" and self.inner is None:
            object.__setattr__(self, "inner", MonomialOrder("grevlex"))
        if self.kind != "block" and (self.front or self.inner is not None):
            raise PolynomialError("only block orders take front variables", code="BAD_ORDER")

    @classmethod
    def lex(cls) -> "MonomialOrder":
        return cls("lex")

    @classmethod
    def grevlex(cls) -> "MonomialOrder":
        return cls("grevlex")

    @classmethod
    def block(cls, front: Sequence[str], inner: Optional["MonomialOrder"] = None) -> "MonomialOrder":
        return cls("block", tuple(front), inner or cls.grevlex())

    @classmethod
    def from_name(cls, name: str) -> "MonomialOrder":
        if name not in ("lex", "grevlex"):
            raise PolynomialError(f"unknown monomial order {name!r} (expected lex or grevlex)", code="BAD_ORDER")
        return cls(name)  # type: ignore[arg-type]

    def __str__(self) -> str:
        if self.kind == "block":
            return f"block({','.join(self.front)};{self.inner})"
        return self.kind

    def key(self, vars: VariableSet) -> SortKey:
        """Sort key on exponent tuples; larger key means larger monomial."""
        return _key_for(self, vars)

    def compare(self, m1: Monomial, m2: Monomial, vars: Optional[VariableSet] = None) -> Comparison:
        if len(m1) != len(m2):
            raise PolynomialError("monomials have different lengths", code="MISMATCH")
        if vars is None:
            if self.kind == "block":
                raise PolynomialError("block orders need a variable set", code="MISMATCH")
            vars = VariableSet(tuple(f"v{i}" for i in range(len(m1))))
        key = self.key(vars)
        k1, k2 = key(m1), key(m2)
        if k1 == k2:
            return Comparison.EQ
        return Comparison.GT if k1 > k2 else Comparison.LT


def compare(order: MonomialOrder, m1: Monomial, m2: Monomial, vars: Optional[VariableSet] = None) -> Comparison:
    return order.compare(m1, m2, vars)


def _subset_key(order: MonomialOrder, names: Tuple[str, ...], idx: Tuple[int, ...]) -> SortKey:
    if order.kind == "lex":
        return lambda m: tuple(m[i] for i in idx)
    if order.kind == "grevlex":
        rev = idx[::-1]
        return lambda m: (sum(m[i] for i in idx),) + tuple(-m[i] for i in rev)
    front = set(order.front)
    f_idx = tuple(i for i in idx if names[i] in front)
    r_idx = tuple(i for i in idx if names[i] not in front)
    outer = _subset_key(MonomialOrder.grevlex(), names, f_idx)
    inner = _subset_key(order.inner or MonomialOrder.grevlex(), names, r_idx)
    return lambda m: outer(m) + inner(m)


@lru_cache(maxsize=256)
def _key_for(order: MonomialOrder, vars: VariableSet) -> SortKey:
    if order.kind == "block":
        for name in order.front:
            vars.index(name)
    n = len(vars)
    if order.kind == "lex":
        return lambda m: m
    if order.kind == "grevlex":
        return lambda m: (sum(m),) + tuple(-e for e in reversed(m))
    return _subset_key(order, vars.names, tuple(range(n)))
