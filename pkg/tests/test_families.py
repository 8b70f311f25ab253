import pytest
from pydantic import ValidationError

from cmlab import families
from cmlab.families import FamilyInstance, canonical_cases, canonical_instance, family_check
from cmlab.matrices import Ring
from cmlab.reports import PreconditionError
from polycore.field import CoefficientField

QQ = CoefficientField.rationals()
FP = CoefficientField.prime(32003)


class TestCanonicalFamilies:
    @pytest.mark.parametrize("kind,m", canonical_cases())
    @pytest.mark.parametrize("field", [QQ, FP], ids=["q", "fp"])
    def test_passes(self, kind, m, field):
        report = family_check(kind, field=field, m=m)
        assert report.status == "pass", report.details
        assert report.check_id == f"family/{kind}/m={m}"

    def test_l56_uses_d(self):
        report = family_check("L56", m=2)
        assert report.params["param"] == "d"
        assert "A(0) = A" in report.details

    def test_l59_deformation(self):
        inst = canonical_instance("L59", 2)
        ring = Ring.of(["c"], QQ)
        c = ring.var("c")
        _, (name, Ac, _) = families._members("L59", families._Data(inst, QQ), ring, c, None)
        assert name == "A"
        assert Ac == [[ring.zero(), c], [ring.zero(), ring.const(1)]]


class TestFailures:
    def test_wrong_denominator(self):
        report = family_check("L59", m=3, denominator_override="b")
        assert report.status == "fail"
        assert report.params["denominator_override"] == "b"
        assert any(o.startswith("A(c)B - BA(c) - c alpha beta") for o in report.offending)

    def test_non_commuting_instance(self):
        inst = FamilyInstance(kind="L56", A=[[0, 1], [0, 0]], B=[[1, 0], [0, 0]], alpha=[1, 0], beta=[0, 1])
        report = family_check("L56", inst)
        assert report.status == "fail"
        assert report.details == "hypothesis violated: AB = BA"

    def test_family_hypothesis(self):
        inst = FamilyInstance(kind="L56", A=[[0, 0], [0, 0]], B=[[0, 1], [0, 0]], alpha=[1, 0], beta=[0, 1])
        report = family_check("L56", inst)
        assert report.status == "fail"
        assert report.offending == ["a2 != 0"]

    def test_l56_only_at_two(self):
        with pytest.raises(PreconditionError):
            family_check("L56", m=3)

    def test_kind_mismatch(self):
        with pytest.raises(PreconditionError):
            family_check("L54", canonical_instance("L55", 2))


class TestFamilyInstance:
    def test_non_square(self):
        with pytest.raises(ValidationError):
            FamilyInstance(kind="L56", A=[[0, 1]], B=[[0]], alpha=[1], beta=[0])

    def test_block_size_required(self):
        with pytest.raises(ValidationError):
            FamilyInstance(kind="L54", A=[[0, 0], [0, 0]], B=[[0, 1], [0, 0]], alpha=[1, 0], beta=[0, 1])

    def test_extra_field(self):
        with pytest.raises(ValidationError):
            FamilyInstance(kind="L56", A=[[0]], B=[[0]], alpha=[0], beta=[0], gamma=[0])
