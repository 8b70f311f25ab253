"""Commuting-scheme laboratory: presentations, maps, points, families and the check suite."""

from .families import FamilyInstance, HypothesisViolation, canonical_instance, family_check
from .points import check_jacobian_rank, lemma58_generators, point_P
from .psi import CVTuple, SamplingError, check_psi_membership, check_tangent_bound, psi_sample
from .regular import NonCommutingError, check_regular_point, regular_point_test
from .reports import PreconditionError, VerificationReport, run_check, summarize
from .ring_maps import RingMap, RingMapError, identity_map, lemma27_map, lemma28_map, lemma44_map, verify_hom
from .schemes import SchemeSpec, SchemeSpecError, build_ideal, check_dimension, commutator_entries, expected_dimension
from .suite import SuiteConfig, run_suite

__all__ = [
    "CVTuple",
    "FamilyInstance",
    "HypothesisViolation",
    "NonCommutingError",
    "PreconditionError",
    "RingMap",
    "RingMapError",
    "SamplingError",
    "SchemeSpec",
    "SchemeSpecError",
    "SuiteConfig",
    "VerificationReport",
    "build_ideal",
    "canonical_instance",
    "check_dimension",
    "check_jacobian_rank",
    "check_psi_membership",
    "check_regular_point",
    "check_tangent_bound",
    "commutator_entries",
    "expected_dimension",
    "family_check",
    "identity_map",
    "lemma27_map",
    "lemma28_map",
    "lemma44_map",
    "lemma58_generators",
    "point_P",
    "psi_sample",
    "regular_point_test",
    "run_check",
    "run_suite",
    "summarize",
    "verify_hom",
]
