#!/usr/bin/env python3
"""Coefficient fields: the rationals and prime fields F_p.

Rational elements are sympy ``QQ`` elements (arbitrary-precision fractions).
Prime-field elements are plain Python ints kept in ``[0, p)``; inversion uses
``pow(a, -1, p)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Any, Literal, Optional, Union

from sympy import isprime
from sympy.polys.domains import QQ

FieldKind = Literal["rationals", "prime_field"]
Scalar = Any

_FRACTION_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*([+-]?\d+)\s*)?$")


class FieldError(Exception):
    """Raised for invalid field descriptors or non-representable coefficients."""
    def __init__(self, message: str, code: str = "FIELD") -> None:
        super().__init__(message)
        self.code = code


@dataclass(frozen=True)
class CoefficientField:
    kind: FieldKind
    characteristic: int = 0

    def __post_init__(self) -> None:
        if self.kind == "rationals":
            if self.characteristic != 0:
                raise FieldError("the rationals have characteristic 0")
        elif self.kind == "prime_field":
            p = self.characteristic
            if p < 3 or not isprime(p):
                raise FieldError(f"characteristic must be an odd prime, got {p}")
        else:
            raise FieldError(f"unknown field kind {self.kind!r}")

    @classmethod
    def rationals(cls) -> "CoefficientField":
        return cls("rationals", 0)

    @classmethod
    def prime(cls, p: int) -> "CoefficientField":
        return cls("prime_field", int(p))

    @property
    def is_prime(self) -> bool:
        return self.kind == "prime_field"

    @property
    def descriptor(self) -> str:
        return f"fp:{self.characteristic}" if self.is_prime else "q"

    def __str__(self) -> str:
        return self.descriptor

    @property
    def zero(self) -> Scalar:
        return 0 if self.is_prime else QQ(0)

    @property
    def one(self) -> Scalar:
        return 1 if self.is_prime else QQ(1)

    def from_int(self, n: int) -> Scalar:
        return n % self.characteristic if self.is_prime else QQ(n)

    def from_fraction(self, num: int, den: int) -> Scalar:
        if den == 0:
            raise FieldError("zero denominator", code="NOT_REPRESENTABLE")
        if self.is_prime:
            p = self.characteristic
            if den % p == 0:
                raise FieldError(f"{num}/{den} is not representable in F_{p}: p divides the denominator", code="NOT_REPRESENTABLE")
            return (num * pow(den, -1, p)) % p
        return QQ(num, den)

    def convert(self, value: Union[int, str, Scalar]) -> Scalar:
        """Coerce an int, an ``"n/d"`` string or a native element into this field."""
        if isinstance(value, bool):
            raise FieldError(f"cannot convert {value!r}")
        if isinstance(value, int):
            return self.from_int(value)
        if isinstance(value, str):
            m = _FRACTION_RE.match(value)
            if not m:
                raise FieldError(f"cannot parse scalar {value!r}")
            return self.from_fraction(int(m.group(1)), int(m.group(2) or 1))
        num = getattr(value, "numerator", None)
        den = getattr(value, "denominator", None)
        if num is None or den is None:
            raise FieldError(f"cannot convert {value!r}")
        return self.from_fraction(int(num), int(den))

    def normalize(self, x: Scalar) -> Scalar:
        return x % self.characteristic if self.is_prime else x

    def add(self, a: Scalar, b: Scalar) -> Scalar:
        return (a + b) % self.characteristic if self.is_prime else a + b

    def sub(self, a: Scalar, b: Scalar) -> Scalar:
        return (a - b) % self.characteristic if self.is_prime else a - b

    def mul(self, a: Scalar, b: Scalar) -> Scalar:
        return (a * b) % self.characteristic if self.is_prime else a * b

    def neg(self, a: Scalar) -> Scalar:
        return (-a) % self.characteristic if self.is_prime else -a

    def inv(self, a: Scalar) -> Scalar:
        if a == 0:
            raise FieldError("division by zero", code="ZERO_DIVISION")
        if self.is_prime:
            return pow(a, -1, self.characteristic)
        return QQ(1) / a

    def div(self, a: Scalar, b: Scalar) -> Scalar:
        return self.mul(a, self.inv(b))

    def power(self, a: Scalar, e: int) -> Scalar:
        return pow(a, e, self.characteristic) if self.is_prime else a ** e

    def format(self, x: Scalar) -> str:
        """Text form; prime residues print in the symmetric range ``(-p/2, p/2]``."""
        if self.is_prime:
            p = self.characteristic
            return str(x - p if x > p // 2 else x)
        num, den = int(x.numerator), int(x.denominator)
        return str(num) if den == 1 else f"{num}/{den}"

    def random_element(self, rng: Any, bound: Optional[int] = None) -> Scalar:
        """Draw from a numpy Generator: uniform residue mod p, or an integer in [-bound, bound]."""
        if self.is_prime:
            return int(rng.integers(0, self.characteristic))
        b = 97 if bound is None else bound
        return QQ(int(rng.integers(-b, b + 1)))


def parse_field(descriptor: str, default_prime: Optional[int] = None) -> CoefficientField:
    """Parse ``q``, ``fp`` (default prime) or ``fp:<p>``."""
    text = (descriptor or "").strip().lower()
    if text in ("q", "qq", "rationals"):
        return CoefficientField.rationals()
    if text == "fp" and default_prime is not None:
        return CoefficientField.prime(default_prime)
    if text.startswith("fp:"):
        try:
            p = int(text[3:])
        except ValueError:
            raise FieldError(f"invalid prime in field descriptor {descriptor!r}")
        return CoefficientField.prime(p)
    raise FieldError(f"unknown field descriptor {descriptor!r} (expected q or fp:<p>)")
