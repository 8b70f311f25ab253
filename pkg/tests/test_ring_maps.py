import os

import pytest
from pydantic import ValidationError

from cli.idealfile import read_ideal_file
from cmlab.matrices import Ring
from cmlab.ring_maps import (
    RingMap,
    RingMapError,
    _lambda_coefficient,
    identity_map,
    lemma27_map,
    lemma28_map,
    lemma44_map,
    verify_hom,
)
from cmlab import matrices as mx
from cmlab.schemes import SchemeSpec, build_ideal
from polycore.field import CoefficientField
from polycore.parser import parse_polynomial

QQ = CoefficientField.rationals()
FP = CoefficientField.prime(32003)


class TestRingMapModel:
    def test_images_must_cover_source(self):
        I = build_ideal(SchemeSpec(family="R", n=2), QQ)
        with pytest.raises(ValidationError):
            RingMap(name="partial", source=I, target=I, images={"x11": I.var("x11")})

    def test_zero_witness(self):
        I = build_ideal(SchemeSpec(family="R", n=1), QQ)
        images = {v: I.var(v) for v in I.vars}
        with pytest.raises(ValidationError):
            RingMap(name="w", source=I, target=I, images=images, inverse_witnesses=(("z1", I.const(0)),))

    def test_localized_target(self):
        M = lemma28_map(2, QQ)
        loc = M.localized_target()
        assert loc.vars.names[-1] == "z1"
        assert len(loc.gens) == len(M.target.gens) + 1

    def test_apply_section_without_section(self):
        I = build_ideal(SchemeSpec(family="R", n=1), QQ)
        M = RingMap(name="plain", source=I, target=I, images={v: I.var(v) for v in I.vars})
        with pytest.raises(RingMapError):
            M.apply_section(I.var("x11"))

    @pytest.mark.parametrize("builder", [lemma27_map, lemma28_map, lemma44_map])
    def test_needs_n_at_least_two(self, builder):
        with pytest.raises(RingMapError):
            builder(1, QQ)


class TestLemma27:
    def test_images(self):
        M = lemma27_map(2, QQ)
        loc = M.localized_target().vars
        assert M.images["x12"].is_zero() and M.images["y21"].is_zero()
        assert M.images["x21"] == parse_polynomial("v1", loc, QQ)
        assert M.images["y12"] == parse_polynomial("u1", loc, QQ)
        assert M.images["x22"] == parse_polynomial("t1", loc, QQ)
        assert M.images["y22"] == parse_polynomial("t2", loc, QQ)

    @pytest.mark.parametrize("field", [QQ, FP], ids=["q", "fp"])
    def test_passes(self, field):
        report = verify_hom(lemma27_map(2, field))
        assert report.status == "pass", report.details
        assert report.check_id == "hom/lemma-2.7/n=2"
        assert "section verified" in report.details

    def test_corrupted_map_names_offender(self):
        report = verify_hom(lemma27_map(2, QQ, corrupt=True))
        assert report.status == "fail"
        assert report.check_id == "hom/lemma-2.7/n=2/corrupted"
        assert report.offending
        assert any("source generator" in o for o in report.offending)

    @pytest.mark.slow
    def test_n3(self):
        report = verify_hom(lemma27_map(3, FP))
        assert report.status == "pass", report.details


class TestIdentity:
    @pytest.mark.parametrize("name", ["I2", "J1_t1", "J1_w", "Jt1_w", "hyperbola", "zero2"])
    def test_corpus(self, corpus_dir, name):
        I = read_ideal_file(os.path.join(corpus_dir, f"{name}.ideal"))
        report = verify_hom(identity_map(I))
        assert report.status == "pass", report.details
        assert report.check_id == f"hom/identity/{I.label}"

    def test_identity_on_empty_presentation(self):
        report = verify_hom(identity_map(build_ideal(SchemeSpec(family="R", n=1), QQ)))
        assert report.status == "pass"

    def test_budget(self):
        report = verify_hom(identity_map(build_ideal(SchemeSpec(family="R", n=2), QQ)), budget_s=1e-9)
        assert report.status == "budget_exceeded"


class TestLocalizedMaps:
    def test_lambda_coefficient_of_one_by_one(self):
        ring = Ring.of(["x11", "t2"], QQ)
        h = _lambda_coefficient(ring, mx.symbolic(ring, "x", 1), ring.var("t2"))
        # det(x11 - t2 + lam) has lam-coefficient 1
        assert h == ring.const(1)

    def test_lambda_coefficient_of_two_by_two(self):
        ring = Ring.of(["x11", "x12", "x21", "x22", "t2"], QQ)
        h = _lambda_coefficient(ring, mx.symbolic(ring, "x", 2), ring.var("t2"))
        assert h == parse_polynomial("x11 + x22 - 2*t2", ring.vars, QQ)

    @pytest.mark.slow
    def test_lemma28(self):
        report = verify_hom(lemma28_map(2, FP))
        assert report.status == "pass", report.details
        assert report.params["target"].endswith("[z1]")

    @pytest.mark.slow
    def test_lemma44(self):
        report = verify_hom(lemma44_map(2, FP))
        assert report.status == "pass", report.details
        assert "section verified" in report.details

    def test_lemma44_section_covers_localized_target(self):
        M = lemma44_map(2, QQ)
        assert set(M.section) == set(M.localized_target().vars.names)
        assert M.section["t2"] == M.source.var("y22")
        assert M.section["v1"] == M.source.var("vp1")
