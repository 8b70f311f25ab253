import os

import pytest

from cli.idealfile import IdealFileError, corpus_files, parse_ideal_text, read_ideal_file
from polycore.field import CoefficientField


class TestParseIdealText:
    def test_label_and_field(self):
        I = parse_ideal_text("# parabola\nvars: x y\nfield: fp:101\nx^2 - y  # the curve\n")
        assert I.label == "parabola"
        assert I.field == CoefficientField.prime(101)
        assert I.lines() == ["x^2 - y"]

    def test_override_wins(self):
        I = parse_ideal_text("vars: x\nfield: fp:101\nx\n", CoefficientField.rationals())
        assert I.field == CoefficientField.rationals()

    def test_default_field(self):
        assert parse_ideal_text("vars: x\nx\n").field == CoefficientField.rationals()

    def test_no_generators(self):
        assert parse_ideal_text("vars: x y\n").gens == ()

    @pytest.mark.parametrize("text,line", [
        ("x + y\n", 1),
        ("", 1),
        ("vars: x\nx\nfield: q\n", 3),
        ("vars: x\nvars: y\n", 2),
        ("vars: x x\n", 1),
        ("vars: x\nfield: fp:9\n", 2),
    ])
    def test_errors_name_the_line(self, text, line):
        with pytest.raises(IdealFileError) as e:
            parse_ideal_text(text)
        assert e.value.line == line

    def test_polynomial_error_position(self):
        with pytest.raises(IdealFileError) as e:
            parse_ideal_text("vars: x y\n\nx + * y\n")
        assert (e.value.line, e.value.column) == (3, 5)
        assert str(e.value).startswith("line 3, column 5: ")

    def test_unknown_variable(self):
        with pytest.raises(IdealFileError) as e:
            parse_ideal_text("vars: x\nx + w\n")
        assert e.value.code == "UNKNOWN_VARIABLE"


class TestReadIdealFile:
    def test_label_from_comment(self, corpus_dir):
        I = read_ideal_file(os.path.join(corpus_dir, "I2.ideal"))
        assert I.label == "I(2): entries of [X, Y] for 2x2 matrices"

    def test_label_from_stem(self, tmp_path):
        path = tmp_path / "plain.ideal"
        path.write_text("vars: x\nx\n")
        assert read_ideal_file(str(path)).label == "plain"

    def test_io_error(self, tmp_path):
        with pytest.raises(IdealFileError) as e:
            read_ideal_file(str(tmp_path / "missing.ideal"))
        assert e.value.code == "IO"

    def test_corpus_listing(self, corpus_dir):
        names = [os.path.basename(p) for p in corpus_files(corpus_dir)]
        assert names == sorted(names)
        assert "I2.ideal" in names and "hyperbola.ideal" in names
