#!/usr/bin/env python3
"""Ordered variable sets and exponent-tuple monomials."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, Tuple

Monomial = Tuple[int, ...]

_NAME_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")
_AUX_RE = re.compile(r"^z(\d+)$")


class PolynomialError(Exception):
    """Raised on malformed polynomial operations, with a typed code."""
    def __init__(self, message: str, code: str = "MISMATCH") -> None:
        super().__init__(message)
        self.code = code


@dataclass(frozen=True)
class VariableSet:
    """Ordered, duplicate-free variable names; position 0 is the largest variable."""

    names: Tuple[str, ...]
    _index: Dict[str, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        bad = [n for n in names if not isinstance(n, str) or not _NAME_RE.match(n)]
        if bad:
            raise PolynomialError(f"invalid variable names: {bad}", code="BAD_NAME")
        if len(set(names)) != len(names):
            dupes = sorted({n for n in names if names.count(n) > 1})
            raise PolynomialError(f"duplicate variable names: {dupes}", code="BAD_NAME")
        object.__setattr__(self, "_index", {n: i for i, n in enumerate(names)})

    @classmethod
    def of(cls, *names: str) -> "VariableSet":
        if len(names) == 1 and not isinstance(names[0], str):
            return cls(tuple(names[0]))
        return cls(tuple(names))

    def __len__(self) -> int:
        return len(self.names)

    def __iter__(self) -> Iterator[str]:
        return iter(self.names)

    def __contains__(self, name: object) -> bool:
        return name in self._index

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise PolynomialError(f"unknown variable {name!r}", code="UNKNOWN_VARIABLE") from None

    def extend(self, names: Iterable[str]) -> "VariableSet":
        return VariableSet(self.names + tuple(names))

    def without(self, names: Iterable[str]) -> "VariableSet":
        drop = set(names)
        for n in drop:
            self.index(n)
        return VariableSet(tuple(n for n in self.names if n not in drop))

    def fresh_aux(self) -> str:
        """Next auxiliary name z{k}, one past the largest z index in use."""
        used = [int(m.group(1)) for m in (_AUX_RE.match(n) for n in self.names) if m]
        return f"z{max(used, default=0) + 1}"

    def unit(self, name: str) -> Monomial:
        i = self.index(name)
        return tuple(1 if j == i else 0 for j in range(len(self.names)))

    def one(self) -> Monomial:
        return (0,) * len(self.names)


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    """a / b, assuming b divides a."""
    return tuple(x - y for x, y in zip(a, b))


def mono_divides(b: Monomial, a: Monomial) -> bool:
    return all(y <= x for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_coprime(a: Monomial, b: Monomial) -> bool:
    return not any(x and y for x, y in zip(a, b))


def mono_degree(a: Monomial) -> int:
    return sum(a)


def mono_support(a: Monomial) -> Tuple[int, ...]:
    return tuple(i for i, e in enumerate(a) if e)
