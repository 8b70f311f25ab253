import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from cmlab.regular import (
    NonCommutingError,
    canonical_cases,
    check_regular_point,
    diagonal,
    jordan_block,
    regular_point_test,
)
from cmlab.reports import PreconditionError
from polycore import linalg
from polycore.field import CoefficientField, FieldError

QQ = CoefficientField.rationals()
F101 = CoefficientField.prime(101)


class TestRegularPointTest:
    @pytest.mark.parametrize("name", sorted(canonical_cases()))
    def test_canonical(self, name):
        A, B, dim, regular = canonical_cases()[name]
        assert regular_point_test(A, B, QQ) == (dim, regular)

    @pytest.mark.parametrize("name", sorted(canonical_cases()))
    def test_symmetric_in_the_pair(self, name):
        A, B, _, _ = canonical_cases()[name]
        assert regular_point_test(A, B, QQ) == regular_point_test(B, A, QQ)

    def test_non_commuting(self):
        with pytest.raises(NonCommutingError) as e:
            regular_point_test(jordan_block(2), diagonal([1, 2]), QQ)
        assert e.value.code == "NON_COMMUTING"

    @pytest.mark.parametrize("A,B", [([], []), ([[1, 0], [0, 1]], [[1]]), ([[1, 0]], [[1, 0]])])
    def test_bad_shapes(self, A, B):
        with pytest.raises(ValueError):
            regular_point_test(A, B, QQ)

    @given(st.sampled_from(sorted(canonical_cases())), st.integers(0, 2**32 - 1))
    @settings(deadline=None, max_examples=50)
    def test_conjugation_invariant(self, name, seed):
        A, B, dim, regular = canonical_cases()[name]
        n = len(A)
        rng = np.random.default_rng(seed)
        P = [[int(x) for x in row] for row in rng.integers(0, 101, size=(n, n))]
        try:
            Pinv = linalg.inverse(P, F101)
        except FieldError:
            assume(False)
        conj = lambda M: linalg.matmul(linalg.matmul(P, [[F101.convert(x) for x in r] for r in M], F101), Pinv, F101)
        assert regular_point_test(conj(A), conj(B), F101) == (dim, regular)


class TestCheckRegularPoint:
    def test_report(self):
        report = check_regular_point("jordan3-zero", QQ)
        assert report.status == "pass"
        assert report.check_id == "regular-point/jordan3-zero"
        assert report.details == "centralizer dimension 3, regular"

    def test_unknown_case(self):
        with pytest.raises(PreconditionError):
            check_regular_point("nope", QQ)
