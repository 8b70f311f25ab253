import os

import pytest

from polycore.field import CoefficientField
from polycore.parser import parse_polynomial
from polycore.variables import VariableSet

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


@pytest.fixture(autouse=True)
def _isolated_metrics(monkeypatch, tmp_path):
    from configs.config import Config
    monkeypatch.setattr(Config, "METRICS_ENABLED", False)
    monkeypatch.setattr(Config, "METRICS_ROOT", str(tmp_path / "metrics"))


@pytest.fixture
def rationals():
    return CoefficientField.rationals()


@pytest.fixture
def fp():
    return CoefficientField.prime(32003)


@pytest.fixture
def corpus_dir():
    return os.path.join(ROOT, "corpus")


@pytest.fixture
def poly():
    """poly("x^2 - y", "x y", field) -> Polynomial."""
    def make(text, names, field=None):
        vars = VariableSet(tuple(names.split())) if isinstance(names, str) else names
        return parse_polynomial(text, vars, field or CoefficientField.rationals())
    return make
