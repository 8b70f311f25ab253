#!/usr/bin/env python3
"""Immutable sparse multivariate polynomials.

A Polynomial maps exponent tuples to nonzero field elements. Instances are
never mutated after construction; every operation returns a new object.
"""

from __future__ import annotations

from typing import TYPE_CHECKING, Any, Dict, Iterable, Iterator, List, Mapping, Optional, Tuple, Union

from .field import CoefficientField, Scalar
from .monomials import MonomialOrder
from .variables import Monomial, PolynomialError, VariableSet, mono_mul

if TYPE_CHECKING:
    from .point import Point

Operand = Union["Polynomial", int, str, Any]


class Polynomial:
    __slots__ = ("_terms", "vars", "field", "_hash", "_lead")

    def __init__(self, terms: Mapping[Monomial, Scalar], vars: VariableSet, field: CoefficientField, *, _trusted: bool = False) -> None:
        if _trusted:
            self._terms: Dict[Monomial, Scalar] = dict(terms)
        else:
            n = len(vars)
            clean: Dict[Monomial, Scalar] = {}
            for mono, c in terms.items():
                mono = tuple(int(e) for e in mono)
                if len(mono) != n or any(e < 0 for e in mono):
                    raise PolynomialError(f"exponent vector {mono} does not fit {n} variables", code="MISMATCH")
                c = field.convert(c)
                if mono in clean:
                    c = field.add(clean[mono], c)
                if c == 0:
                    clean.pop(mono, None)
                else:
                    clean[mono] = c
            self._terms = clean
        self.vars = vars
        self.field = field
        self._hash: Optional[int] = None
        self._lead: Optional[Tuple[MonomialOrder, Monomial]] = None

    # construction

    @classmethod
    def zero(cls, vars: VariableSet, field: CoefficientField) -> "Polynomial":
        return cls({}, vars, field, _trusted=True)

    @classmethod
    def constant(cls, c: Any, vars: VariableSet, field: CoefficientField) -> "Polynomial":
        c = field.convert(c)
        if c == 0:
            return cls.zero(vars, field)
        return cls({vars.one(): c}, vars, field, _trusted=True)

    @classmethod
    def variable(cls, name: str, vars: VariableSet, field: CoefficientField) -> "Polynomial":
        return cls({vars.unit(name): field.one}, vars, field, _trusted=True)

    @classmethod
    def monomial(cls, mono: Monomial, coeff: Scalar, vars: VariableSet, field: CoefficientField) -> "Polynomial":
        return cls({mono: coeff}, vars, field)

    # inspection

    def items(self) -> Iterable[Tuple[Monomial, Scalar]]:
        return self._terms.items()

    def terms(self) -> Dict[Monomial, Scalar]:
        return dict(self._terms)

    def monomials(self) -> List[Monomial]:
        return list(self._terms)

    def coefficient(self, mono: Monomial) -> Scalar:
        return self._terms.get(tuple(mono), self.field.zero)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and not any(next(iter(self._terms))))

    def constant_value(self) -> Scalar:
        if not self.is_constant():
            raise PolynomialError("polynomial is not constant", code="NOT_CONSTANT")
        return self._terms.get(self.vars.one(), self.field.zero)

    def total_degree(self) -> int:
        return max((sum(m) for m in self._terms), default=-1)

    def used_variables(self) -> List[str]:
        used = set()
        for m in self._terms:
            used.update(i for i, e in enumerate(m) if e)
        return [self.vars.names[i] for i in sorted(used)]

    def leading_term(self, order: MonomialOrder) -> Tuple[Monomial, Scalar]:
        if not self._terms:
            raise PolynomialError("the zero polynomial has no leading term", code="ZERO_INPUT")
        # terms are unordered; remember the last order asked for
        if self._lead is not None and self._lead[0] == order:
            mono = self._lead[1]
        else:
            mono = max(self._terms, key=order.key(self.vars))
            self._lead = (order, mono)
        return mono, self._terms[mono]

    def leading_monomial(self, order: MonomialOrder) -> Monomial:
        return self.leading_term(order)[0]

    def leading_coefficient(self, order: MonomialOrder) -> Scalar:
        return self.leading_term(order)[1]

    def sorted_terms(self, order: MonomialOrder) -> List[Tuple[Monomial, Scalar]]:
        key = order.key(self.vars)
        return sorted(self._terms.items(), key=lambda kv: key(kv[0]), reverse=True)

    # arithmetic

    def _coerce(self, other: Operand) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.vars != self.vars:
                raise PolynomialError(f"variable sets differ: {self.vars.names} vs {other.vars.names}", code="MISMATCH")
            if other.field != self.field:
                raise PolynomialError(f"fields differ: {self.field} vs {other.field}", code="MISMATCH")
            return other
        return Polynomial.constant(other, self.vars, self.field)

    def __add__(self, other: Operand) -> "Polynomial":
        other = self._coerce(other)
        field = self.field
        out = dict(self._terms)
        for mono, c in other._terms.items():
            s = field.add(out[mono], c) if mono in out else c
            if s == 0:
                out.pop(mono, None)
            else:
                out[mono] = s
        return Polynomial(out, self.vars, field, _trusted=True)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        neg = self.field.neg
        return Polynomial({m: neg(c) for m, c in self._terms.items()}, self.vars, self.field, _trusted=True)

    def __sub__(self, other: Operand) -> "Polynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other: Operand) -> "Polynomial":
        return self._coerce(other) - self

    def __mul__(self, other: Operand) -> "Polynomial":
        other = self._coerce(other)
        if not self._terms or not other._terms:
            return Polynomial.zero(self.vars, self.field)
        field = self.field
        out: Dict[Monomial, Scalar] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = mono_mul(m1, m2)
                c = field.mul(c1, c2)
                if m in out:
                    c = field.add(out[m], c)
                out[m] = c
        return Polynomial({m: c for m, c in out.items() if c != 0}, self.vars, field, _trusted=True)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Polynomial":
        if not isinstance(e, int) or e < 0:
            raise PolynomialError(f"exponent must be a nonnegative integer, got {e!r}", code="BAD_EXPONENT")
        result = Polynomial.constant(1, self.vars, self.field)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def scale(self, c: Scalar) -> "Polynomial":
        c = self.field.convert(c)
        if c == 0:
            return Polynomial.zero(self.vars, self.field)
        mul = self.field.mul
        return Polynomial({m: mul(v, c) for m, v in self._terms.items()}, self.vars, self.field, _trusted=True)

    def mul_term(self, mono: Monomial, coeff: Scalar) -> "Polynomial":
        if coeff == 0:
            return Polynomial.zero(self.vars, self.field)
        mul = self.field.mul
        return Polynomial({mono_mul(m, mono): mul(v, coeff) for m, v in self._terms.items()}, self.vars, self.field, _trusted=True)

    def monic(self, order: MonomialOrder) -> "Polynomial":
        if not self._terms:
            return self
        return self.scale(self.field.inv(self.leading_coefficient(order)))

    # calculus, evaluation and substitution

    def partial_derivative(self, name: str) -> "Polynomial":
        i = self.vars.index(name)
        field = self.field
        out: Dict[Monomial, Scalar] = {}
        for m, c in self._terms.items():
            e = m[i]
            if e == 0:
                continue
            d = field.mul(c, field.from_int(e))
            if d == 0:
                continue
            out[m[:i] + (e - 1,) + m[i + 1:]] = d
        return Polynomial(out, self.vars, field, _trusted=True)

    def evaluate(self, point: "Point") -> Scalar:
        if point.field != self.field:
            raise PolynomialError(f"point lives over {point.field}, polynomial over {self.field}", code="MISMATCH")
        values = point.values_for(self.vars, self.used_variables())
        field = self.field
        total = field.zero
        for m, c in self._terms.items():
            term = c
            for i, e in enumerate(m):
                if e:
                    term = field.mul(term, field.power(values[i], e))
            total = field.add(total, term)
        return total

    def substitute(self, images: Mapping[str, "Polynomial"], target: VariableSet) -> "Polynomial":
        """Apply the ring map sending each variable to its image on ``target``."""
        field = self.field
        used = self.used_variables()
        missing = [v for v in used if v not in images]
        if missing:
            raise PolynomialError(f"no image for variables {missing}", code="UNKNOWN_VARIABLE")
        for v in used:
            img = images[v]
            if img.vars != target or img.field != field:
                raise PolynomialError(f"image of {v} does not live on the target ring", code="MISMATCH")
        powers: Dict[Tuple[int, int], Polynomial] = {}

        def power(i: int, e: int) -> Polynomial:
            key = (i, e)
            if key not in powers:
                base = images[self.vars.names[i]]
                powers[key] = base if e == 1 else power(i, e - 1) * base
            return powers[key]

        acc: Dict[Monomial, Scalar] = {}
        for m, c in self._terms.items():
            term = Polynomial.constant(c, target, field)
            for i, e in enumerate(m):
                if e:
                    term = term * power(i, e)
                    if term.is_zero():
                        break
            for tm, tc in term._terms.items():
                s = field.add(acc[tm], tc) if tm in acc else tc
                if s == 0:
                    acc.pop(tm, None)
                else:
                    acc[tm] = s
        return Polynomial(acc, target, field, _trusted=True)

    def rebase(self, vars: VariableSet) -> "Polynomial":
        """Re-embed on another variable set that contains every variable in use."""
        if vars == self.vars:
            return self
        positions = [vars.index(name) for name in self.used_variables()]
        used_idx = [self.vars.index(name) for name in self.used_variables()]
        n = len(vars)
        out: Dict[Monomial, Scalar] = {}
        for m, c in self._terms.items():
            new = [0] * n
            for src, dst in zip(used_idx, positions):
                new[dst] = m[src]
            out[tuple(new)] = c
        return Polynomial(out, vars, self.field, _trusted=True)

    # comparison and printing

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self.vars == other.vars and self.field == other.field and self._terms == other._terms
        if isinstance(other, int):
            return self == Polynomial.constant(other, self.vars, self.field)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.vars, self.field, frozenset(self._terms.items())))
        return self._hash

    def to_str(self, order: Optional[MonomialOrder] = None) -> str:
        return format_polynomial(self, order)

    def __str__(self) -> str:
        return format_polynomial(self)

    def __repr__(self) -> str:
        return f"Polynomial({format_polynomial(self)!r}, field={self.field})"


def _format_monomial(mono: Monomial, names: Tuple[str, ...]) -> str:
    parts = []
    for name, e in zip(names, mono):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_polynomial(f: Polynomial, order: Optional[MonomialOrder] = None) -> str:
    """Canonical text: terms in descending order, ``*`` and ``^`` explicit."""
    if f.is_zero():
        return "0"
    order = order or MonomialOrder.grevlex()
    pieces: List[str] = []
    for mono, c in f.sorted_terms(order):
        coeff = f.field.format(c)
        body = _format_monomial(mono, f.vars.names)
        if not body:
            term = coeff
        elif coeff == "1":
            term = body
        elif coeff == "-1":
            term = "-" + body
        else:
            term = f"{coeff}*{body}"
        if not pieces:
            pieces.append(term)
        elif term.startswith("-"):
            pieces.append(" - " + term[1:])
        else:
            pieces.append(" + " + term)
    return "".join(pieces)


def partial_derivative(f: Polynomial, v: str) -> Polynomial:
    return f.partial_derivative(v)


def evaluate(f: Polynomial, p: "Point") -> Scalar:
    return f.evaluate(p)


def substitute(f: Polynomial, images: Mapping[str, Polynomial], target: VariableSet) -> Polynomial:
    return f.substitute(images, target)


def add(f: Polynomial, g: Polynomial) -> Polynomial:
    return f + g


def mul(f: Polynomial, g: Polynomial) -> Polynomial:
    return f * g
