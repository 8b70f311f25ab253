import pytest
from pydantic import ValidationError

from cmlab.reports import VerificationReport
from cmlab.suite import SuiteConfig, SuiteTask, build_tasks, execute, run_suite, summary_line

SMALL = dict(max_n=1, max_m=1, field="fp:32003", psi_samples=3, budget_s=60)


class TestBuildTasks:
    def test_sorted_and_unique(self):
        ids = [t.check_id for t in build_tasks(SuiteConfig(max_n=2, max_m=2))]
        assert ids == sorted(ids)
        assert len(ids) == len(set(ids))

    def test_contents(self):
        ids = {t.check_id for t in build_tasks(SuiteConfig(max_n=2, max_m=2))}
        assert {"dimension/I(1)", "dimension/J(2)+(t,w2)", "hom/lemma-2.7/n=2", "saturation/I(2)"} <= ids
        assert {"dimension/I1(2)", "dimension/J'(2)+(v)", "dimension/I(2)+(x_in,y_ni)", "dimension/J(2)+(t)"} <= ids
        assert "jacobian/m=2/m1=1/m2=1" in ids
        assert "family/L56/m=2" in ids

    def test_small_grid_skips_lemma_maps(self):
        ids = {t.check_id for t in build_tasks(SuiteConfig(**SMALL))}
        assert not any(i.startswith("hom/lemma") for i in ids)
        assert "hom/identity/I(1)" in ids


class TestSuiteConfig:
    @pytest.mark.parametrize("bad", [{"budget_s": 0}, {"max_n": 0}, {"workers": 0}, {"order": "deglex"}, {"colour": 1}])
    def test_rejects(self, bad):
        with pytest.raises(ValidationError):
            SuiteConfig(**bad)


class TestRunSuite:
    def test_small_suite_passes(self):
        reports = run_suite(SuiteConfig(**SMALL))
        failed = [r.check_id for r in reports if r.status != "pass"]
        assert failed == []
        assert [r.check_id for r in reports] == [t.check_id for t in build_tasks(SuiteConfig(**SMALL))]

    def test_corrupt_mode_fails(self):
        reports = run_suite(SuiteConfig(corrupt=True, **SMALL))
        by_id = {r.check_id: r for r in reports}
        assert by_id["jacobian/m=1/m1=0/m2=0"].status == "fail"

    def test_repeatable_without_timing(self):
        cfg = SuiteConfig(timing=False, **SMALL)
        first = [r.to_json() for r in run_suite(cfg)]
        assert first == [r.to_json() for r in run_suite(cfg)]

    def test_progress_callback(self):
        seen = []
        reports = run_suite(SuiteConfig(**SMALL), progress=seen.append)
        assert len(seen) == len(reports)

    @pytest.mark.slow
    def test_parallel_matches_serial(self):
        cfg = SuiteConfig(timing=False, **SMALL)
        serial = [r.to_json() for r in run_suite(cfg)]
        parallel = [r.to_json() for r in run_suite(cfg.model_copy(update={"workers": 2}))]
        assert serial == parallel


class TestExecute:
    def test_parameter_error_becomes_fail(self):
        task = SuiteTask("family/L56/m=3", "family", ("L56", 3))
        report = execute(task, SuiteConfig(**SMALL))
        assert report.status == "fail"
        assert report.check_id == "family/L56/m=3"
        assert report.details.startswith("PRECONDITION:")


def test_summary_line():
    reports = [
        VerificationReport(check_id="a", status="pass"),
        VerificationReport(check_id="b", status="fail", offending=["x"]),
        VerificationReport(check_id="c", status="budget_exceeded"),
    ]
    assert summary_line(reports) == "pass=1 fail=1 budget_exceeded=1 total=3"
