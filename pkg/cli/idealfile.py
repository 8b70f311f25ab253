#!/usr/bin/env python3
"""Reader for ``.ideal`` files.

    # optional label comment
    vars: x y z
    field: q            (optional; q or fp:<p>)
    x^2 - y
    x*y - 1

``#`` starts a comment anywhere on a line. Errors carry 1-based line and column.
"""

from __future__ import annotations

import logging
import os
from typing import List, Optional

from configs.config import Config
from idealops.presentation import IdealPresentation
from polycore.field import CoefficientField, FieldError, parse_field
from polycore.parser import ParseError, parse_polynomial
from polycore.variables import PolynomialError, VariableSet

logger = logging.getLogger(__name__)


class IdealFileError(Exception):
    def __init__(self, message: str, code: str = "PARSE", line: Optional[int] = None, column: Optional[int] = None) -> None:
        where = f"line {line}" + (f", column {column}" if column is not None else "") + ": " if line is not None else ""
        super().__init__(where + message)
        self.code = code
        self.line = line
        self.column = column


def parse_ideal_text(
    text: str,
    field_override: Optional[CoefficientField] = None,
    label: Optional[str] = None,
) -> IdealPresentation:
    vars: Optional[VariableSet] = None
    field: Optional[CoefficientField] = None
    title: Optional[str] = None
    gens = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body, _, comment = raw.partition("#")
        stripped = body.strip()
        if not stripped:
            if title is None and comment.strip() and vars is None:
                title = comment.strip()
            continue
        indent = len(body) - len(body.lstrip())
        if vars is None:
            if not stripped.startswith("vars:"):
                raise IdealFileError("expected 'vars:' header before any polynomial", line=lineno, column=indent + 1)
            try:
                vars = VariableSet(tuple(stripped[len("vars:"):].split()))
            except PolynomialError as e:
                raise IdealFileError(str(e), line=lineno) from e
            continue
        if stripped.startswith("vars:"):
            raise IdealFileError("repeated 'vars:' header", line=lineno, column=indent + 1)
        if stripped.startswith("field:"):
            if gens:
                raise IdealFileError("'field:' must precede the polynomials", line=lineno, column=indent + 1)
            try:
                field = parse_field(stripped[len("field:"):].strip(), Config.DEFAULT_PRIME)
            except FieldError as e:
                raise IdealFileError(str(e), line=lineno) from e
            continue
        gens.append((lineno, indent, body))
    if vars is None:
        raise IdealFileError("missing 'vars:' header", line=1)
    field = field_override or field or parse_field(Config.DEFAULT_FIELD, Config.DEFAULT_PRIME)
    polys = []
    for lineno, indent, body in gens:
        try:
            polys.append(parse_polynomial(body, vars, field))
        except ParseError as e:
            located = e.at_line(lineno)
            raise IdealFileError(e.message, code=e.code, line=lineno, column=located.column) from e
    return IdealPresentation(vars=vars, gens=tuple(polys), field=field, label=label or title or "ideal")


def read_ideal_file(path: str, field_override: Optional[CoefficientField] = None) -> IdealPresentation:
    try:
        with open(path, "r", encoding="utf-8") as f:
            text = f.read()
    except OSError as e:
        raise IdealFileError(f"cannot read {path}: {e}", code="IO") from e
    stem = os.path.splitext(os.path.basename(path))[0]
    I = parse_ideal_text(text, field_override)
    return I if I.label != "ideal" else I.relabel(stem)


def corpus_files(root: Optional[str] = None) -> List[str]:
    root = root or Config.CORPUS_ROOT
    return sorted(os.path.join(root, n) for n in os.listdir(root) if n.endswith(".ideal"))
