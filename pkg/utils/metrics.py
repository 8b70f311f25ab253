#!/usr/bin/env python3
"""Counters and timers for the Groebner engine and the suite runner.

Records are appended as JSONL under Config.METRICS_ROOT when
Config.METRICS_ENABLED is set. Timers always measure, so callers can read
``elapsed_ms`` even when recording is disabled.
"""

from __future__ import annotations

import json
import time
from pathlib import Path
from typing import Any, Dict, Optional

from configs.config import Config


def _path() -> Path:
    root = Path(getattr(Config, "METRICS_ROOT", ".cache/cmlab/metrics"))
    root.mkdir(parents=True, exist_ok=True)
    return root / "metrics.log"


def enabled() -> bool:
    return bool(getattr(Config, "METRICS_ENABLED", False))


def incr(name: str, value: Any = 1, **labels: Any) -> None:
    if not enabled():
        return
    rec: Dict[str, Any] = {"ts": int(time.time()), "metric": name, "value": value}
    for k, v in labels.items():
        # polynomials and labels can be long
        if isinstance(v, str) and len(v) > 200:
            rec[k] = v[:200] + "..."
        else:
            rec[k] = v
    line = json.dumps(rec, separators=(",", ":"), sort_keys=True) + "\n"
    with open(_path(), "a", encoding="utf-8") as f:
        f.write(line)


class Timer:
    """Context manager measuring wall time; records ``<name>.latency_s`` on exit."""

    def __init__(self, name: str, **labels: Any):
        self.name = name
        self.labels = labels
        self._t0 = 0.0
        self.elapsed_s: Optional[float] = None

    def __enter__(self) -> "Timer":
        self._t0 = time.perf_counter()
        return self

    def __exit__(self, *exc: Any) -> None:
        self.elapsed_s = time.perf_counter() - self._t0
        incr(name=f"{self.name}.latency_s", value=round(self.elapsed_s, 6), **self.labels)

    @property
    def elapsed_ms(self) -> int:
        if self.elapsed_s is None:
            return int((time.perf_counter() - self._t0) * 1000)
        return int(self.elapsed_s * 1000)
