#!/usr/bin/env python3
"""Cooperative time budgets for long-running algebra.

A Deadline is polled by the hot loops (pair processing, reduction steps);
exceeding it raises BudgetExceeded so callers can report the check as
``budget_exceeded`` instead of returning a wrong answer.
"""

from __future__ import annotations

import math
import time
from typing import Any, Callable, Optional


class BudgetExceeded(Exception):
    """Raised when a computation runs past its time budget."""
    def __init__(self, message: str, code: str = "BUDGET") -> None:
        super().__init__(message)
        self.code = code


class Deadline:
    def __init__(self, seconds: Optional[float]) -> None:
        if seconds is not None and seconds <= 0:
            raise ValueError("budget must be positive")
        self.seconds = seconds
        self._t0 = time.perf_counter()
        self._limit = math.inf if seconds is None else self._t0 + seconds

    @classmethod
    def unlimited(cls) -> "Deadline":
        return cls(None)

    @property
    def elapsed_s(self) -> float:
        return time.perf_counter() - self._t0

    def expired(self) -> bool:
        return time.perf_counter() > self._limit

    def check(self, where: str = "") -> None:
        if time.perf_counter() > self._limit:
            suffix = f" during {where}" if where else ""
            raise BudgetExceeded(f"Budget exceeded{suffix}: {self.elapsed_s:.3f}s > {self.seconds}s")


def with_watchdog(fn: Callable[[Deadline], Any], *, max_runtime_s: Optional[float], on_timeout: Optional[Callable[[], Any]] = None) -> Any:
    """Run ``fn`` under a fresh deadline; ``on_timeout`` fires before re-raising."""
    deadline = Deadline(max_runtime_s)
    try:
        return fn(deadline)
    except BudgetExceeded:
        if on_timeout is not None:
            on_timeout()
        raise
