#!/usr/bin/env python3
"""The verification suite: a registry of independent checks and a runner.

Tasks are plain picklable records so the runner can fan them out to a
process pool; reports always come back sorted by check_id.
"""

from __future__ import annotations

import concurrent.futures
import logging
from typing import Any, Callable, Dict, List, Literal, NamedTuple, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, confloat, conint

from configs.config import Config
from polycore.field import CoefficientField, parse_field
from polycore.monomials import MonomialOrder

from . import families, points, psi, regular, ring_maps, schemes
from .reports import VerificationReport, summarize

logger = logging.getLogger(__name__)


class SuiteConfig(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    max_n: conint(ge=1) = 2
    max_m: conint(ge=1) = 2
    field: str = Field(default_factory=lambda: Config.DEFAULT_FIELD)
    order: Literal["lex", "grevlex"] = "grevlex"
    budget_s: confloat(gt=0) = Field(default_factory=lambda: Config.CHECK_BUDGET_S)
    out: Optional[str] = None
    seed: conint(ge=0) = 0
    workers: conint(ge=1) = Field(default_factory=lambda: Config.SUITE_WORKERS)
    psi_samples: conint(ge=1) = Field(default_factory=lambda: Config.PSI_SAMPLES)
    timing: bool = True
    corrupt: bool = False

    def coefficient_field(self) -> CoefficientField:
        return parse_field(self.field, Config.DEFAULT_PRIME)

    def monomial_order(self) -> MonomialOrder:
        return MonomialOrder.from_name(self.order)


class SuiteTask(NamedTuple):
    check_id: str
    kind: str
    args: Tuple[Any, ...]


def _dimension_specs(cfg: SuiteConfig) -> List[schemes.SchemeSpec]:
    specs: List[schemes.SchemeSpec] = []
    for n in range(1, cfg.max_n + 1):
        specs.append(schemes.SchemeSpec(family="R", n=n))
        specs.append(schemes.SchemeSpec(family="R", n=n, extra=("kill_xin", "kill_yni")))
        specs.append(schemes.SchemeSpec(family="R1", n=n))
        specs.append(schemes.SchemeSpec(family="R_prime", n=n, extra=("kill_v",)))
    for m in range(1, cfg.max_m + 1):
        for tags in (("t=0", "add_w"), ("t=0",), ("t=1",), ("add_w",)):
            specs.append(schemes.SchemeSpec(family="R_tilde", n=m, extra=tags))
    return specs


def build_tasks(cfg: SuiteConfig) -> List[SuiteTask]:
    tasks: List[SuiteTask] = []
    for spec in _dimension_specs(cfg):
        tasks.append(SuiteTask(f"dimension/{spec.label}", "dimension", (spec.family, spec.n, spec.extra)))
    for m in range(1, cfg.max_m + 1):
        for m1, m2 in points.valid_triples(m):
            tasks.append(SuiteTask(f"jacobian/m={m}/m1={m1}/m2={m2}", "jacobian", (m, m1, m2)))
            tasks.append(SuiteTask(f"psi-membership/m={m}/m1={m1}/m2={m2}", "psi", (m, m1, m2)))
            tasks.append(SuiteTask(f"tangent-bound/m={m}/m1={m1}/m2={m2}", "tangent", (m, m1, m2)))
    for n in range(1, cfg.max_n + 1):
        tasks.append(SuiteTask(f"hom/identity/I({n})", "hom", ("identity", n)))
    for n in range(2, cfg.max_n + 1):
        tasks.append(SuiteTask(f"hom/lemma-2.7/n={n}", "hom", ("2.7", n)))
    if cfg.max_n >= 2:
        tasks.append(SuiteTask("hom/lemma-2.8/n=2", "hom", ("2.8", 2)))
        tasks.append(SuiteTask("hom/lemma-4.4/n=2", "hom", ("4.4", 2)))
        tasks.append(SuiteTask("saturation/I(2)", "saturation", (2,)))
    for kind, m in families.canonical_cases():
        if m <= max(cfg.max_m, 2):
            tasks.append(SuiteTask(f"family/{kind}/m={m}", "family", (kind, m)))
    for name in sorted(regular.canonical_cases()):
        tasks.append(SuiteTask(f"regular-point/{name}", "regular", (name,)))
    return sorted(tasks, key=lambda t: t.check_id)


def hom_map(which: str, n: int, field: CoefficientField, corrupt: bool = False) -> ring_maps.RingMap:
    if which == "identity":
        return ring_maps.identity_map(schemes.build_ideal(schemes.SchemeSpec(family="R", n=n), field))
    if which == "2.7":
        return ring_maps.lemma27_map(n, field, corrupt=corrupt)
    if which == "2.8":
        return ring_maps.lemma28_map(n, field)
    if which == "4.4":
        return ring_maps.lemma44_map(n, field)
    raise ring_maps.RingMapError(f"unknown map {which!r} (expected identity, 2.7, 2.8 or 4.4)")


def _run_task(task: SuiteTask, cfg: SuiteConfig) -> VerificationReport:
    field = cfg.coefficient_field()
    common = {"budget_s": cfg.budget_s, "timing": cfg.timing}
    kind, args = task.kind, task.args
    if kind == "dimension":
        family, n, extra = args
        spec = schemes.SchemeSpec(family=family, n=n, extra=extra)
        return schemes.check_dimension(spec, field, cfg.monomial_order(), **common)
    if kind == "jacobian":
        return points.check_jacobian_rank(*args, field, coincident=cfg.corrupt, **common)
    if kind == "psi":
        return psi.check_psi_membership(*args, field, samples=cfg.psi_samples, seed=cfg.seed, **common)
    if kind == "tangent":
        return psi.check_tangent_bound(*args, field, seed=cfg.seed, **common)
    if kind == "hom":
        which, n = args
        return ring_maps.verify_hom(hom_map(which, n, field, corrupt=cfg.corrupt), **common)
    if kind == "saturation":
        return schemes.check_saturation_stable(args[0], field, **common)
    if kind == "family":
        fam, m = args
        return families.family_check(fam, field=field, m=m, **common)
    if kind == "regular":
        return regular.check_regular_point(args[0], field, **common)
    raise ValueError(f"unknown task kind {kind!r}")


def execute(task: SuiteTask, cfg: SuiteConfig) -> VerificationReport:
    """Run one task; parameter errors become fail reports instead of aborting the suite."""
    try:
        report = _run_task(task, cfg)
    except Exception as e:  # noqa: BLE001
        code = getattr(e, "code", type(e).__name__)
        logger.warning("%s: %s: %s", task.check_id, code, e)
        report = VerificationReport(
            check_id=task.check_id,
            params={"task": task.kind, "args": list(task.args)},
            status="fail",
            details=f"{code}: {e}",
            offending=[str(e)],
        )
    if report.check_id != task.check_id:
        report = report.model_copy(update={"check_id": task.check_id})
    return report


def run_suite(
    cfg: SuiteConfig,
    *,
    progress: Optional[Callable[[VerificationReport], None]] = None,
) -> List[VerificationReport]:
    tasks = build_tasks(cfg)
    logger.info("running %d checks (max_n=%d, max_m=%d, field=%s, workers=%d)", len(tasks), cfg.max_n, cfg.max_m, cfg.field, cfg.workers)
    reports: List[VerificationReport] = []
    if cfg.workers > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=cfg.workers) as executor:
            futures = [executor.submit(execute, t, cfg) for t in tasks]
            for fut in concurrent.futures.as_completed(futures):
                report = fut.result()
                reports.append(report)
                if progress:
                    progress(report)
    else:
        for t in tasks:
            report = execute(t, cfg)
            reports.append(report)
            if progress:
                progress(report)
    reports.sort(key=lambda r: r.check_id)
    logger.info("suite finished: %s", summarize(reports))
    return reports


def summary_line(reports: List[VerificationReport]) -> str:
    counts = summarize(reports)
    return f"pass={counts['pass']} fail={counts['fail']} budget_exceeded={counts['budget_exceeded']} total={len(reports)}"
