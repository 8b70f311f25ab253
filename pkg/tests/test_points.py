import pytest

from cmlab.points import (
    check_jacobian_rank,
    cv_variables,
    eigenvalue_tables,
    lemma58_generators,
    point_P,
    valid_triples,
    vanishing_failures,
)
from cmlab.reports import PreconditionError
from polycore.field import CoefficientField

QQ = CoefficientField.rationals()
FP = CoefficientField.prime(32003)

TRIPLES = [(m, m1, m2) for m in range(1, 5) for m1, m2 in valid_triples(m)]


class TestPointP:
    def test_generic_point_m1(self):
        p = point_P(1, 0, 0)
        assert p.as_dict() == {"x11": 2, "y11": 4, "u1": 0, "v1": 0, "t1": 1, "t2": 1}

    def test_eigenvector_point_m1(self):
        p = point_P(1, 1, 0)
        assert p.as_dict() == {"x11": 1, "y11": 4, "u1": 1, "v1": 0, "t1": 1, "t2": 1}

    def test_eigenvalue_tables_are_distinct_off_the_forced_block(self):
        a, b = eigenvalue_tables(4, 1, 2)
        assert a == [1, 3, 4, 5]
        assert b == [7, 8, 1, 1]

    def test_variables(self):
        assert cv_variables(1) == ["x11", "y11", "u1", "v1", "t1", "t2"]

    def test_generator_count(self):
        assert len(lemma58_generators(3, QQ)) == 9 + 3 + 3 + 1

    @pytest.mark.parametrize("m,m1,m2", TRIPLES)
    def test_point_lies_on_cv(self, m, m1, m2):
        for field in (QQ, FP):
            assert vanishing_failures(lemma58_generators(m, field), point_P(m, m1, m2, field)) == []

    @pytest.mark.parametrize("m,m1,m2", [(1, 1, 1), (2, 2, 1), (0, 0, 0), (2, -1, 0)])
    def test_invalid_triple(self, m, m1, m2):
        with pytest.raises(PreconditionError):
            point_P(m, m1, m2)


class TestJacobianRank:
    @pytest.mark.parametrize("m,m1,m2", TRIPLES)
    def test_rank_is_m_squared_plus_m(self, m, m1, m2):
        report = check_jacobian_rank(m, m1, m2, FP)
        assert report.status == "pass", report.details
        assert f"rank={m * m + m}" in report.details

    def test_report_shape(self):
        report = check_jacobian_rank(2, 1, 1, QQ)
        assert report.check_id == "jacobian/m=2/m1=1/m2=1"
        assert report.params["expected_rank"] == 6
        assert report.details.startswith("rank=6")

    def test_off_scheme_point_fails_before_rank(self):
        p = point_P(1, 0, 0).replace(u1=1)
        report = check_jacobian_rank(1, 0, 0, point=p)
        assert report.status == "fail"
        assert "rank not asserted" in report.details
        assert "rank=" not in report.details

    def test_shifted_t1_fails_on_rank(self):
        p = point_P(1, 0, 0).replace(t1=2)
        report = check_jacobian_rank(1, 0, 0, point=p)
        assert report.status == "fail"
        assert "rank=1" in report.details

    def test_coincident_eigenvalues_drop_rank(self):
        report = check_jacobian_rank(1, 0, 0, coincident=True)
        assert report.status == "fail"
        assert report.offending == ["rank 1 != 2"]

    def test_precondition(self):
        with pytest.raises(PreconditionError):
            check_jacobian_rank(1, 1, 1)
