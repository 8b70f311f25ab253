import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cmlab.points import valid_triples, vanishing_failures
from cmlab.psi import SamplingError, check_psi_membership, check_tangent_bound, psi_draw, psi_sample
from cmlab.reports import PreconditionError
from cmlab.schemes import SchemeSpec, build_ideal
from polycore.field import CoefficientField

QQ = CoefficientField.rationals()
FP = CoefficientField.prime(32003)

SMALL_TRIPLES = [(m, m1, m2) for m in range(1, 4) for m1, m2 in valid_triples(m)]


class TestPsiSample:
    def test_seeded_draws_repeat(self):
        assert psi_sample(2, 1, 1, 7, FP) == psi_sample(2, 1, 1, 7, FP)

    def test_seeds_differ(self):
        assert psi_sample(2, 1, 1, 1, FP) != psi_sample(2, 1, 1, 2, FP)

    def test_eigenvector_case(self):
        s = psi_sample(1, 1, 0, 3, FP)
        assert s.beta == [0]
        assert s.A == [[s.a]]
        assert s.violations() == []

    def test_generic_case(self):
        s = psi_sample(1, 0, 0, 3, QQ)
        assert s.alpha == [0] and s.beta == [0]
        assert s.A[0][0] != s.a
        assert s.B[0][0] != s.b
        assert s.violations() == []

    @pytest.mark.parametrize("m,m1,m2", SMALL_TRIPLES)
    def test_flattened_point_lies_on_cv(self, m, m1, m2):
        I = build_ideal(SchemeSpec(family="R_tilde", n=m, extra=("t=0", "add_w")), FP)
        rng = np.random.default_rng(m * 100 + m1 * 10 + m2)
        for _ in range(5):
            s = psi_draw(m, m1, m2, rng, FP)
            assert s.violations() == []
            assert vanishing_failures(list(I.gens), s.to_point()) == []

    @given(st.integers(0, 2**32 - 1))
    @settings(deadline=None, max_examples=25)
    def test_rational_samples_are_exact(self, seed):
        assert psi_sample(2, 1, 0, seed, QQ).violations() == []

    def test_field_too_small(self):
        with pytest.raises(SamplingError) as e:
            psi_sample(2, 0, 0, 0, CoefficientField.prime(7))
        assert e.value.code == "SAMPLING"

    def test_negative_seed(self):
        with pytest.raises(SamplingError):
            psi_sample(1, 0, 0, -1, FP)

    def test_invalid_triple(self):
        with pytest.raises(PreconditionError):
            psi_sample(2, 2, 1, 0, FP)

    def test_tiny_range_exhausts_retries(self):
        # a single value in [-0, 0] can never give two distinct eigenvalues
        with pytest.raises(SamplingError):
            psi_draw(1, 0, 0, np.random.default_rng(0), QQ, max_retries=3, bound=0)


class TestPsiChecks:
    @pytest.mark.parametrize("m,m1,m2", [(1, 0, 0), (1, 1, 0), (1, 0, 1), (2, 1, 1), (2, 0, 2)])
    def test_membership(self, m, m1, m2):
        report = check_psi_membership(m, m1, m2, FP, samples=20, seed=0)
        assert report.status == "pass", report.details
        assert report.check_id == f"psi-membership/m={m}/m1={m1}/m2={m2}"

    @pytest.mark.slow
    @pytest.mark.parametrize("m", [3, 4])
    def test_membership_sweep(self, m):
        for m1, m2 in valid_triples(m):
            assert check_psi_membership(m, m1, m2, FP, samples=100).status == "pass"

    @pytest.mark.parametrize("m,m1,m2", [(1, 0, 0), (1, 1, 0), (2, 1, 1)])
    def test_tangent_bound(self, m, m1, m2):
        report = check_tangent_bound(m, m1, m2, FP, samples=5)
        assert report.status == "pass", report.details
        assert report.params["bound"] == m * m + m

