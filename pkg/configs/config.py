import os
from typing import Dict, Any

class Config:
	"""Configuration for the commuting-scheme laboratory."""

	# Coefficient fields
	DEFAULT_FIELD = os.getenv("DEFAULT_FIELD", "q")
	DEFAULT_PRIME = int(os.getenv("DEFAULT_PRIME", "32003"))
	DEFAULT_ORDER = os.getenv("DEFAULT_ORDER", "grevlex")
	DEFAULT_SEED = int(os.getenv("DEFAULT_SEED", "0"))

	# Groebner engine
	GB_SELECTION = os.getenv("GB_SELECTION", "normal")
	GB_DEADLINE_POLL = int(os.getenv("GB_DEADLINE_POLL", "64"))
	CHECK_BUDGET_S = float(os.getenv("CHECK_BUDGET_S", "600"))

	# Samplers
	PSI_SAMPLES = int(os.getenv("PSI_SAMPLES", "100"))
	PSI_MAX_RETRIES = int(os.getenv("PSI_MAX_RETRIES", "64"))
	# Rational samples are drawn from [-R, R]
	PSI_RATIONAL_RANGE = int(os.getenv("PSI_RATIONAL_RANGE", "97"))

	# Suite runner
	SUITE_WORKERS = int(os.getenv("SUITE_WORKERS", "1"))
	GOLDEN_ROOT = os.getenv("GOLDEN_ROOT", "corpus/golden")
	CORPUS_ROOT = os.getenv("CORPUS_ROOT", "corpus")

	# Observability
	LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO")
	METRICS_ROOT = os.getenv("METRICS_ROOT", ".cache/cmlab/metrics")
	METRICS_ENABLED = bool(int(os.getenv("METRICS_ENABLED", "0")))

	@classmethod
	def get_groebner_config(cls) -> Dict[str, Any]:
		return {
			"selection": cls.GB_SELECTION,
			"deadline_poll": cls.GB_DEADLINE_POLL,
			"budget_s": cls.CHECK_BUDGET_S,
		}

	@classmethod
	def get_sampling_config(cls) -> Dict[str, Any]:
		"""Get sampler configuration.

		Returns:
			Mapping with sample count, retry bound for singular draws, and the rational draw range.
		"""
		return {
			"samples": cls.PSI_SAMPLES,
			"max_retries": cls.PSI_MAX_RETRIES,
			"rational_range": cls.PSI_RATIONAL_RANGE,
			"seed": cls.DEFAULT_SEED,
		}

	@classmethod
	def get_suite_config(cls) -> Dict[str, Any]:
		return {
			"field": cls.DEFAULT_FIELD,
			"order": cls.DEFAULT_ORDER,
			"budget_s": cls.CHECK_BUDGET_S,
			"workers": cls.SUITE_WORKERS,
		}

	@classmethod
	def get_metrics_config(cls) -> Dict[str, Any]:
		return {
			"log_level": cls.LOG_LEVEL,
			"metrics_root": cls.METRICS_ROOT,
			"metrics_enabled": cls.METRICS_ENABLED,
		}
