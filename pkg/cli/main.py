#!/usr/bin/env python3
"""Command-line front end for the commuting-scheme laboratory.

Exit codes: 0 pass, 1 parse/precondition/IO error, 2 budget exceeded,
3 mathematical failure (failed check, unit ideal, golden mismatch).
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import tempfile
from typing import List, Optional

from dotenv import load_dotenv
from pydantic import ValidationError

load_dotenv()

from cache.golden_store import GoldenStore  # noqa: E402
from cli.idealfile import IdealFileError, read_ideal_file  # noqa: E402
from cmlab import families, points, psi, regular, ring_maps, schemes  # noqa: E402
from cmlab.reports import PreconditionError, VerificationReport  # noqa: E402
from cmlab.suite import SuiteConfig, hom_map, run_suite, summary_line  # noqa: E402
from configs.config import Config  # noqa: E402
from idealops.dimension import UnitIdealError, krull_dimension  # noqa: E402
from polycore.field import FieldError, parse_field  # noqa: E402
from polycore.monomials import MonomialOrder  # noqa: E402
from polycore.parser import ParseError  # noqa: E402
from polycore.variables import PolynomialError  # noqa: E402
from utils.budget import BudgetExceeded, with_watchdog  # noqa: E402
from utils.metrics import incr  # noqa: E402
from utils.validation import validate_report_payload  # noqa: E402

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_BUDGET = 2
EXIT_FAIL = 3

CHECKS = ("dimension", "jacobian", "psi-membership", "hom", "family", "regular-point", "tangent-bound", "saturation")


class UsageError(Exception):
	def __init__(self, message: str, code: str = "USAGE") -> None:
		super().__init__(message)
		self.code = code


class _Parser(argparse.ArgumentParser):
	"""argparse exits with 2 on bad usage; 2 means budget here, so raise instead."""

	def error(self, message: str) -> None:  # type: ignore[override]
		raise UsageError(message)


def _write_atomic(path: str, text: str) -> None:
	dirname = os.path.dirname(os.path.abspath(path))
	tmp_fd, tmp_path = tempfile.mkstemp(dir=dirname, prefix=".tmp_", suffix=os.path.splitext(path)[1])
	try:
		with os.fdopen(tmp_fd, "w", encoding="utf-8") as f:
			f.write(text)
			f.flush()
			os.fsync(f.fileno())
		os.replace(tmp_path, path)
	except Exception:
		if os.path.exists(tmp_path):
			os.remove(tmp_path)
		raise


def build_parser() -> argparse.ArgumentParser:
	common = _Parser(add_help=False)
	common.add_argument("--order", choices=("lex", "grevlex"), default=None, help="Monomial order (default from DEFAULT_ORDER)")
	common.add_argument("--field", default=None, help="Coefficient field: q or fp:<p>")
	common.add_argument("--seed", type=int, default=None, help="Seed for the samplers")
	common.add_argument("--budget", type=float, default=None, help="Time budget in seconds per check")
	common.add_argument("--out", default=None, help="Output path")
	common.add_argument("--no-timing", dest="timing", action="store_false", help="Report elapsed_ms as 0 for byte-stable output")
	common.add_argument("--verbose", "-v", action="store_true", help="Enable verbose logging")

	parser = _Parser(
		description="Commuting-scheme laboratory: Groebner bases, dimensions and lemma checks",
		formatter_class=argparse.RawDescriptionHelpFormatter,
		epilog="""
Examples:
  python -m cli.main gb corpus/I2.ideal --order lex
  python -m cli.main dim corpus/Jt1_w.ideal
  python -m cli.main verify --check jacobian --m 2 --m1 1 --m2 1
  python -m cli.main verify --check hom --lemma 2.7 --n 2
  python -m cli.main suite --max-n 2 --max-m 2 --field fp:32003 --out reports.json
		""",
	)
	sub = parser.add_subparsers(dest="command")

	gb = sub.add_parser("gb", parents=[common], help="Print the reduced Groebner basis of an ideal file")
	gb.add_argument("path")
	gb.add_argument("--golden-dir", default=None, help="Store or compare the basis as <stem>.gb in this directory")

	dim = sub.add_parser("dim", parents=[common], help="Print the Krull dimension of an ideal file")
	dim.add_argument("path")

	ver = sub.add_parser("verify", parents=[common], help="Run one check and print its JSON report")
	ver.add_argument("--check", required=True)
	ver.add_argument("--family", default="R")
	ver.add_argument("--n", type=int, default=2)
	ver.add_argument("--tags", default="")
	ver.add_argument("--expected", type=int, default=None)
	ver.add_argument("--m", type=int, default=1)
	ver.add_argument("--m1", type=int, default=0)
	ver.add_argument("--m2", type=int, default=0)
	ver.add_argument("--samples", type=int, default=None)
	ver.add_argument("--lemma", default="2.7", help="identity, 2.7, 2.8 or 4.4")
	ver.add_argument("--corrupt", action="store_true", help="Use the fault-injected variant")
	ver.add_argument("--kind", default="L59", help="L54, L55, L56 or L59")
	ver.add_argument("--denominator-override", default=None)
	ver.add_argument("--case", default="diag12-diag34", help="Regular-point case name")

	su = sub.add_parser("suite", parents=[common], help="Run the whole verification suite")
	su.add_argument("--max-n", type=int, default=2)
	su.add_argument("--max-m", type=int, default=2)
	su.add_argument("--workers", type=int, default=None)
	su.add_argument("--psi-samples", type=int, default=None)
	su.add_argument("--corrupt", action="store_true", help="Inject faults into the point and map tables")

	ex = sub.add_parser("export", parents=[common], help="Write the ideal file of a presentation")
	ex.add_argument("--family", required=True)
	ex.add_argument("--n", type=int, required=True)
	ex.add_argument("--tags", default="")
	return parser


def _field(args):
	return parse_field(args.field or Config.DEFAULT_FIELD, Config.DEFAULT_PRIME)


def _order(args) -> MonomialOrder:
	return MonomialOrder.from_name(args.order or Config.DEFAULT_ORDER)


def _budget(args) -> Optional[float]:
	return args.budget if args.budget is not None else Config.CHECK_BUDGET_S


def _emit(args, text: str) -> None:
	if args.out:
		_write_atomic(args.out, text)
	else:
		sys.stdout.write(text)


def cmd_gb(args) -> int:
	field = parse_field(args.field, Config.DEFAULT_PRIME) if args.field else None
	I = read_ideal_file(args.path, field)
	order = _order(args)
	G = with_watchdog(lambda d: I.groebner(order, d), max_runtime_s=_budget(args), on_timeout=lambda: incr("cli.timeout", op="gb"))
	text = "".join(line + "\n" for line in G.lines())
	_emit(args, text)
	if args.golden_dir:
		stem = os.path.splitext(os.path.basename(args.path))[0]
		if not GoldenStore(args.golden_dir).compare_or_store(stem, text):
			logger.error("reduced basis of %s differs from the golden file", args.path)
			return EXIT_FAIL
	return EXIT_OK


def cmd_dim(args) -> int:
	field = parse_field(args.field, Config.DEFAULT_PRIME) if args.field else None
	I = read_ideal_file(args.path, field)
	order = _order(args)
	try:
		d = with_watchdog(lambda dl: krull_dimension(I, order, dl), max_runtime_s=_budget(args), on_timeout=lambda: incr("cli.timeout", op="dim"))
	except UnitIdealError:
		logger.error("dimension undefined: unit ideal")
		return EXIT_FAIL
	_emit(args, f"{d}\n")
	return EXIT_OK


def _verify_report(args) -> VerificationReport:
	field = _field(args)
	common = {"budget_s": _budget(args), "timing": args.timing}
	seed = args.seed if args.seed is not None else Config.DEFAULT_SEED
	check = args.check
	if check == "dimension":
		spec = schemes.SchemeSpec.create(args.family, args.n, args.tags)
		return schemes.check_dimension(spec, field, _order(args), args.expected, **common)
	if check == "jacobian":
		return points.check_jacobian_rank(args.m, args.m1, args.m2, field, **common)
	if check == "psi-membership":
		return psi.check_psi_membership(args.m, args.m1, args.m2, field, samples=args.samples, seed=seed, **common)
	if check == "tangent-bound":
		return psi.check_tangent_bound(args.m, args.m1, args.m2, field, samples=args.samples or 10, seed=seed, **common)
	if check == "hom":
		return ring_maps.verify_hom(hom_map(args.lemma, args.n, field, corrupt=args.corrupt), **common)
	if check == "family":
		return families.family_check(args.kind, field=field, m=args.m, denominator_override=args.denominator_override, **common)
	if check == "regular-point":
		return regular.check_regular_point(args.case, field, **common)
	if check == "saturation":
		return schemes.check_saturation_stable(args.n, field, **common)
	raise UsageError(f"unknown check id {check!r} (expected one of {', '.join(CHECKS)})")


def cmd_verify(args) -> int:
	report = _verify_report(args)
	_emit(args, report.to_json() + "\n")
	if report.status == "pass":
		return EXIT_OK
	if report.status == "budget_exceeded":
		return EXIT_BUDGET
	return EXIT_FAIL


def cmd_suite(args) -> int:
	cfg = SuiteConfig(
		max_n=args.max_n,
		max_m=args.max_m,
		field=args.field or Config.DEFAULT_FIELD,
		order=args.order or Config.DEFAULT_ORDER,
		budget_s=_budget(args),
		out=args.out,
		seed=args.seed if args.seed is not None else Config.DEFAULT_SEED,
		workers=args.workers or Config.SUITE_WORKERS,
		psi_samples=args.psi_samples or Config.PSI_SAMPLES,
		timing=args.timing,
		corrupt=args.corrupt,
	)
	cfg.coefficient_field()
	reports = run_suite(cfg)
	items = [r.to_payload() for r in reports]
	for item in items:
		(ok, code), _, msg = validate_report_payload(item)
		if not ok:
			logger.error(f"Report {item.get('check_id')} is malformed [{code}]: {msg}")
			print(f"Error [{code}]: malformed report: {msg}", file=sys.stderr)
			return EXIT_ERROR
	payload = json.dumps(items, indent=2, ensure_ascii=False) + "\n"
	if cfg.out:
		_write_atomic(cfg.out, payload)
		print(summary_line(reports))
	else:
		sys.stdout.write(payload)
		logger.info(summary_line(reports))
	return EXIT_FAIL if any(r.status == "fail" for r in reports) else EXIT_OK


def cmd_export(args) -> int:
	spec = schemes.SchemeSpec.create(args.family, args.n, args.tags)
	I = schemes.build_ideal(spec, _field(args))
	_emit(args, I.to_text())
	return EXIT_OK


COMMANDS = {"gb": cmd_gb, "dim": cmd_dim, "verify": cmd_verify, "suite": cmd_suite, "export": cmd_export}


def main(argv: Optional[List[str]] = None) -> int:
	parser = build_parser()
	try:
		args = parser.parse_args(argv)
	except UsageError as e:
		print(f"Error: {e}", file=sys.stderr)
		return EXIT_ERROR

	log_level = logging.DEBUG if getattr(args, "verbose", False) else getattr(logging, Config.LOG_LEVEL.upper(), logging.INFO)
	logging.basicConfig(
		level=log_level,
		format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
	)

	if args.command is None:
		parser.print_help(sys.stderr)
		return EXIT_ERROR
	try:
		return COMMANDS[args.command](args)
	except BudgetExceeded as e:
		print(f"Error: {e}", file=sys.stderr)
		return EXIT_BUDGET
	except (IdealFileError, ParseError, PreconditionError, UsageError, FieldError, PolynomialError,
			schemes.SchemeSpecError, ring_maps.RingMapError, psi.SamplingError, ValidationError, ValueError) as e:
		code = getattr(e, "code", "ERROR")
		print(f"Error [{code}]: {e}", file=sys.stderr)
		return EXIT_ERROR
	except OSError as e:
		print(f"Error [IO]: {e}", file=sys.stderr)
		return EXIT_ERROR


if __name__ == "__main__":
	sys.exit(main())
