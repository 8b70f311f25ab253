import json
import os

import pytest

from cli.idealfile import read_ideal_file
from cli.main import EXIT_BUDGET, EXIT_ERROR, EXIT_FAIL, EXIT_OK, main
from cmlab.schemes import SchemeSpec, build_ideal
from idealops.presentation import ideal_equal
from polycore.field import CoefficientField
from utils.validation import validate_report_payload


def corpus(corpus_dir, name):
    return os.path.join(corpus_dir, f"{name}.ideal")


class TestGb:
    def test_hyperbola_lex(self, corpus_dir, capsys):
        assert main(["gb", corpus(corpus_dir, "hyperbola"), "--order", "lex"]) == EXIT_OK
        assert capsys.readouterr().out == "x - y^2\ny^3 - 1\n"

    def test_zero_ideal(self, corpus_dir, capsys):
        assert main(["gb", corpus(corpus_dir, "zero2")]) == EXIT_OK
        assert capsys.readouterr().out == ""

    def test_malformed_file(self, tmp_path, capsys):
        path = tmp_path / "bad.ideal"
        path.write_text("vars: x y\nx + * y\n")
        assert main(["gb", str(path)]) == EXIT_ERROR
        assert "line 2" in capsys.readouterr().err

    def test_missing_file(self, tmp_path, capsys):
        assert main(["gb", str(tmp_path / "nope.ideal")]) == EXIT_ERROR
        assert "[IO]" in capsys.readouterr().err

    def test_budget(self, corpus_dir):
        assert main(["gb", corpus(corpus_dir, "I2"), "--budget", "1e-9"]) == EXIT_BUDGET

    def test_golden_store_and_compare(self, corpus_dir, tmp_path):
        golden = tmp_path / "golden"
        args = ["gb", corpus(corpus_dir, "hyperbola"), "--order", "lex", "--golden-dir", str(golden)]
        assert main(args) == EXIT_OK
        assert (golden / "hyperbola.gb").read_text() == "x - y^2\ny^3 - 1\n"
        assert main(args) == EXIT_OK
        (golden / "hyperbola.gb").write_text("x - y^2\n")
        assert main(args) == EXIT_FAIL


class TestDim:
    @pytest.mark.parametrize("name,expected", [("I2", 6), ("Jt1_w", 4), ("zero2", 2)])
    def test_corpus(self, corpus_dir, capsys, name, expected):
        assert main(["dim", corpus(corpus_dir, name)]) == EXIT_OK
        assert capsys.readouterr().out == f"{expected}\n"

    def test_unit_ideal(self, tmp_path):
        path = tmp_path / "unit.ideal"
        path.write_text("vars: x y\nx*y - 1\nx\n")
        assert main(["dim", str(path)]) == EXIT_FAIL

    def test_out_file(self, corpus_dir, tmp_path):
        out = tmp_path / "dim.txt"
        assert main(["dim", corpus(corpus_dir, "hyperbola"), "--out", str(out)]) == EXIT_OK
        assert out.read_text() == "0\n"


class TestVerify:
    def test_jacobian(self, capsys):
        assert main(["verify", "--check", "jacobian", "--m", "2", "--m1", "1", "--m2", "1"]) == EXIT_OK
        report = json.loads(capsys.readouterr().out)
        assert report["status"] == "pass"
        assert "rank=6" in report["details"]

    def test_hom(self):
        assert main(["verify", "--check", "hom", "--lemma", "2.7", "--n", "2"]) == EXIT_OK

    def test_corrupted_hom(self, capsys):
        assert main(["verify", "--check", "hom", "--lemma", "2.7", "--corrupt"]) == EXIT_FAIL
        assert json.loads(capsys.readouterr().out)["status"] == "fail"

    def test_family_override(self):
        assert main(["verify", "--check", "family", "--kind", "L59", "--m", "3", "--denominator-override", "b"]) == EXIT_FAIL

    def test_regular_point(self):
        assert main(["verify", "--check", "regular-point", "--case", "jordan2-zero"]) == EXIT_OK

    def test_precondition(self, capsys):
        assert main(["verify", "--check", "jacobian", "--m", "1", "--m1", "1", "--m2", "1"]) == EXIT_ERROR
        assert "PRECONDITION" in capsys.readouterr().err

    def test_unknown_check(self):
        assert main(["verify", "--check", "nonsense"]) == EXIT_ERROR

    def test_missing_check(self):
        assert main(["verify"]) == EXIT_ERROR

    def test_budget(self, capsys):
        assert main(["verify", "--check", "jacobian", "--m", "2", "--m1", "1", "--m2", "1", "--budget", "1e-9"]) == EXIT_BUDGET
        assert json.loads(capsys.readouterr().out)["status"] == "budget_exceeded"

    def test_no_timing(self, capsys):
        main(["verify", "--check", "dimension", "--family", "R", "--n", "1", "--no-timing"])
        assert json.loads(capsys.readouterr().out)["elapsed_ms"] == 0


class TestExport:
    def test_round_trip(self, tmp_path):
        out = tmp_path / "cv1.ideal"
        assert main(["export", "--family", "R_tilde", "--n", "1", "--tags", "t=0,add_w", "--out", str(out)]) == EXIT_OK
        back = read_ideal_file(str(out))
        expected = build_ideal(SchemeSpec(family="R_tilde", n=1, extra=("t=0", "add_w")), CoefficientField.rationals())
        assert back.label == "J(1)+(t,w1)"
        assert ideal_equal(back, expected)

    def test_bad_tags(self, capsys):
        assert main(["export", "--family", "R", "--n", "2", "--tags", "add_w"]) == EXIT_ERROR
        assert "TAGS" in capsys.readouterr().err


class TestSuiteCommand:
    ARGS = ["suite", "--max-n", "1", "--max-m", "1", "--field", "fp:32003", "--psi-samples", "3", "--no-timing"]

    def test_writes_valid_reports(self, tmp_path, capsys):
        out = tmp_path / "reports.json"
        assert main(self.ARGS + ["--out", str(out)]) == EXIT_OK
        payload = json.loads(out.read_text())
        assert payload
        for item in payload:
            (ok, code), _, msg = validate_report_payload(item)
            assert ok, msg
            assert item["elapsed_ms"] == 0
        assert "fail=0" in capsys.readouterr().out

    def test_unwritable_out(self, tmp_path):
        assert main(self.ARGS + ["--out", str(tmp_path / "missing" / "reports.json")]) == EXIT_ERROR

    def test_bad_field(self):
        assert main(["suite", "--field", "fp:8"]) == EXIT_ERROR

    def test_malformed_report_is_not_written(self, tmp_path, monkeypatch):
        class Broken:
            status = "pass"

            def to_payload(self):
                return {"check_id": "dimension/I(1)", "status": "pass", "elapsed_ms": 1.5}

        monkeypatch.setattr("cli.main.run_suite", lambda cfg: [Broken()])
        out = tmp_path / "reports.json"
        assert main(self.ARGS + ["--out", str(out)]) == EXIT_ERROR
        assert not out.exists()


def test_no_command(capsys):
    assert main([]) == EXIT_ERROR
