#!/usr/bin/env python3
"""Recursive-descent parser for the polynomial text grammar.

Grammar (whitespace insignificant, juxtaposition forbidden):

    expr   := term (("+" | "-") term)*
    term   := unary (("*" | "/") unary)*
    unary  := ("+" | "-") unary | power
    power  := atom ("^" INT)?
    atom   := INT | NAME | "(" expr ")"

Division is only allowed by a nonzero constant, which is how rational
coefficients such as ``3/2*x`` are written.
"""

from __future__ import annotations

import re
from typing import List, NamedTuple, Optional

from .field import CoefficientField, FieldError
from .polynomial import Polynomial
from .variables import VariableSet

_TOKEN_RE = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^()]))")


class ParseError(Exception):
    """Raised on malformed polynomial text; ``column`` is 1-based."""
    def __init__(self, message: str, code: str = "PARSE", column: Optional[int] = None, line: Optional[int] = None) -> None:
        self.message = message
        self.code = code
        self.column = column
        self.line = line
        super().__init__(self._render())

    def _render(self) -> str:
        where = []
        if self.line is not None:
            where.append(f"line {self.line}")
        if self.column is not None:
            where.append(f"column {self.column}")
        return f"{', '.join(where)}: {self.message}" if where else self.message

    def at_line(self, line: int, column_offset: int = 0) -> "ParseError":
        col = None if self.column is None else self.column + column_offset
        return ParseError(self.message, code=self.code, column=col, line=line)


class _Token(NamedTuple):
    kind: str
    text: str
    column: int


def _tokenize(text: str) -> List[_Token]:
    tokens: List[_Token] = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN_RE.match(text, pos)
        if not m:
            col = pos + len(text[pos:]) - len(text[pos:].lstrip()) + 1
            raise ParseError(f"unexpected character {text[col - 1]!r}", column=col)
        kind = m.lastgroup or "op"
        start = m.start(kind)
        tokens.append(_Token(kind, m.group(kind), start + 1))
        pos = m.end()
    tokens.append(_Token("end", "", len(text) + 1))
    return tokens


class _Parser:
    def __init__(self, text: str, vars: VariableSet, field: CoefficientField) -> None:
        self.tokens = _tokenize(text)
        self.pos = 0
        self.vars = vars
        self.field = field

    @property
    def tok(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        t = self.tokens[self.pos]
        self.pos += 1
        return t

    def expect_op(self, op: str) -> None:
        if self.tok.kind != "op" or self.tok.text != op:
            found = self.tok.text or "end of input"
            raise ParseError(f"expected {op!r}, found {found!r}", column=self.tok.column)
        self.advance()

    def parse(self) -> Polynomial:
        if self.tok.kind == "end":
            raise ParseError("empty expression", column=self.tok.column)
        result = self.expr()
        if self.tok.kind != "end":
            raise ParseError(f"unexpected {self.tok.text!r}", column=self.tok.column)
        return result

    def expr(self) -> Polynomial:
        acc = self.term()
        while self.tok.kind == "op" and self.tok.text in "+-":
            op = self.advance().text
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self) -> Polynomial:
        acc = self.unary()
        while True:
            t = self.tok
            if t.kind == "op" and t.text in "*/":
                self.advance()
                col = self.tok.column
                rhs = self.unary()
                if t.text == "*":
                    acc = acc * rhs
                else:
                    acc = self._divide(acc, rhs, col)
            elif t.kind in ("int", "name") or (t.kind == "op" and t.text == "("):
                raise ParseError("juxtaposition is not allowed; use '*'", column=t.column)
            else:
                return acc

    def _divide(self, num: Polynomial, den: Polynomial, column: int) -> Polynomial:
        if not den.is_constant():
            raise ParseError("division is only allowed by a constant", column=column)
        c = den.constant_value()
        if c == 0:
            if self.field.is_prime:
                raise ParseError(f"coefficient not representable in F_{self.field.characteristic}: p divides a denominator", code="NOT_REPRESENTABLE", column=column)
            raise ParseError("division by zero", column=column)
        return num.scale(self.field.inv(c))

    def unary(self) -> Polynomial:
        t = self.tok
        if t.kind == "op" and t.text in "+-":
            self.advance()
            inner = self.unary()
            return -inner if t.text == "-" else inner
        return self.power()

    def power(self) -> Polynomial:
        base = self.atom()
        if self.tok.kind == "op" and self.tok.text == "^":
            self.advance()
            t = self.tok
            if t.kind != "int":
                raise ParseError("exponent must be a nonnegative integer literal", column=t.column)
            self.advance()
            if self.tok.kind == "op" and self.tok.text == "^":
                raise ParseError("chained exponents need parentheses", column=self.tok.column)
            return base ** int(t.text)
        return base

    def atom(self) -> Polynomial:
        t = self.tok
        if t.kind == "int":
            self.advance()
            return Polynomial.constant(int(t.text), self.vars, self.field)
        if t.kind == "name":
            self.advance()
            if t.text not in self.vars:
                raise ParseError(f"unknown variable {t.text!r}", code="UNKNOWN_VARIABLE", column=t.column)
            return Polynomial.variable(t.text, self.vars, self.field)
        if t.kind == "op" and t.text == "(":
            self.advance()
            inner = self.expr()
            self.expect_op(")")
            return inner
        found = t.text or "end of input"
        raise ParseError(f"unexpected {found!r}", column=t.column)


def parse_polynomial(text: str, vars: VariableSet, field: CoefficientField) -> Polynomial:
    """Parse ``text`` into a normalized polynomial on ``vars`` over ``field``."""
    try:
        return _Parser(text, vars, field).parse()
    except FieldError as e:
        raise ParseError(str(e), code=e.code) from e
