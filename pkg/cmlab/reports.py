#!/usr/bin/env python3
"""Verification reports and the wrapper that turns a check into one.

A check never raises on mathematical failure: it returns a CheckOutcome,
and budget overruns become ``budget_exceeded`` reports.
"""

from __future__ import annotations

import json
import logging
from typing import Any, Callable, Dict, List, Literal, NamedTuple, Optional

from pydantic import BaseModel, ConfigDict, Field, conint, constr, model_validator

from utils.budget import BudgetExceeded, Deadline
from utils.metrics import Timer

logger = logging.getLogger(__name__)

Status = Literal["pass", "fail", "budget_exceeded"]
REPORT_KEYS = ("check_id", "params", "status", "details", "elapsed_ms")


class PreconditionError(Exception):
    """Raised when check parameters are invalid (for example m1 + m2 > m)."""
    def __init__(self, message: str, code: str = "PRECONDITION") -> None:
        super().__init__(message)
        self.code = code


class _StrictModel(BaseModel):
    model_config = ConfigDict(extra="forbid")


class VerificationReport(_StrictModel):
    """Structured pass/fail record of one check."""

    check_id: constr(min_length=1)
    params: Dict[str, Any] = Field(default_factory=dict)
    status: Status
    details: str = ""
    elapsed_ms: conint(ge=0) = 0
    offending: List[str] = Field(default_factory=list, exclude=True)

    @model_validator(mode="after")
    def _pass_has_no_offenders(self) -> "VerificationReport":
        if self.status == "pass" and self.offending:
            raise ValueError("a passing report cannot list offending generators")
        return self

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_payload(self) -> Dict[str, Any]:
        return {k: getattr(self, k) for k in REPORT_KEYS}

    def to_json(self, indent: Optional[int] = None) -> str:
        return json.dumps(self.to_payload(), indent=indent, ensure_ascii=False)


class CheckOutcome(NamedTuple):
    passed: bool
    details: str
    offending: List[str] = []


def run_check(
    check_id: str,
    params: Dict[str, Any],
    body: Callable[[Deadline], CheckOutcome],
    *,
    budget_s: Optional[float] = None,
    timing: bool = True,
) -> VerificationReport:
    """Run ``body`` under a deadline and wrap its outcome in a report."""
    deadline = Deadline(budget_s)
    with Timer("suite.check", check_id=check_id) as t:
        try:
            outcome = body(deadline)
            status: Status = "pass" if outcome.passed else "fail"
            details = outcome.details
            offending = [] if outcome.passed else list(outcome.offending)
        except BudgetExceeded as e:
            status, details, offending = "budget_exceeded", str(e), []
    elapsed = t.elapsed_ms if timing else 0
    logger.info("%s: %s (%d ms)", check_id, status, t.elapsed_ms)
    if offending:
        details = details + "; offending: " + " | ".join(offending)
    return VerificationReport(
        check_id=check_id,
        params=params,
        status=status,
        details=details,
        elapsed_ms=elapsed,
        offending=offending,
    )


def summarize(reports: List[VerificationReport]) -> Dict[str, int]:
    counts = {"pass": 0, "fail": 0, "budget_exceeded": 0}
    for r in reports:
        counts[r.status] += 1
    return counts
