"""Suite machinery: determinism, sharding, and honest failure reporting."""

import pytest

from subdiv import verify
from subdiv.triangulate import Triangulation, barycentric, iterated_sd, trivial
from subdiv.verify import CaseResult, VerifySuiteReport, run_suite

SMALL = {
    "thm-sd": dict(ns=(2, 3), seeds=(1, 2, 3)),
    "thm-esd": dict(ns=(2, 3), seeds=(1, 2)),
    "thm-uniform": dict(ns=(2, 3), seeds=(1, 2), kinds=("sd", "esd:2")),
    "thm-dnkj": dict(n_max=4),
    "cor-sd": dict(n_max=3),
    "cor-2sd": dict(n_max=3),
    "prop-lnkj": dict(kinds=("sd",)),
    "prop-dnkj": dict(n_max=4),
    "prop-dnkj-rec": dict(n_max=4),
    "prop-esdr": dict(n_max=3, r_max=3),
    "esd-counterexample": {},
    "foata": dict(n_max=5),
}


def snapshot(report: VerifySuiteReport):
    return [(c.params, c.ok, c.detail) for c in report.cases]


class TestReportShape:
    def test_counts_and_flags(self):
        good = CaseResult((("n", 2),), True, "fine")
        bad = CaseResult((("n", 3),), False, "broke")
        report = VerifySuiteReport("s", (good, bad), 0.1)
        assert report.cases_run == 2
        assert report.failures == (bad,)
        assert not report.ok

    def test_label_joins_params(self):
        case = CaseResult((("n", 4), ("seed", 7)), True, "")
        assert case.label == "n=4 seed=7"

    def test_label_of_parameterless_case(self):
        assert CaseResult((), True, "").label == "-"

    def test_unknown_suite_rejected(self):
        with pytest.raises(ValueError, match="unknown suite"):
            run_suite("no-such-suite")


class TestDeterminism:
    def test_repeat_runs_agree(self):
        a = run_suite("thm-sd", ns=(3,), seeds=(5, 6, 7))
        b = run_suite("thm-sd", ns=(3,), seeds=(5, 6, 7))
        assert snapshot(a) == snapshot(b)

    def test_sharded_run_matches_sequential(self):
        a = run_suite("thm-uniform", ns=(2, 3), seeds=(1, 2), kinds=("sd",))
        b = run_suite("thm-uniform", ns=(2, 3), seeds=(1, 2), kinds=("sd",),
                      jobs=3)
        assert snapshot(a) == snapshot(b)

    def test_cases_sorted_by_key(self):
        report = run_suite("foata", n_max=4)
        keys = [c.params for c in report.cases]
        assert keys == sorted(keys)


class TestAllSuitesSmall:
    @pytest.mark.parametrize("suite", verify.SUITE_NAMES)
    def test_suite_passes(self, suite):
        report = run_suite(suite, **SMALL[suite])
        assert report.ok, [f.detail for f in report.failures]
        assert report.cases_run > 0
        assert report.suite == suite

    def test_every_suite_has_a_description(self):
        for suite in verify.SUITE_NAMES:
            assert verify.suite_description(suite)


class TestFailureDetection:
    def test_injected_failure_is_reported(self, monkeypatch):
        def runner(params):
            return CaseResult((("n", params["n"]),), params["n"] != 2, "n is 2")

        monkeypatch.setitem(
            verify._SUITES, "stub",
            ("forced failure", lambda o: [{"n": n} for n in (1, 2, 3)], runner))
        report = run_suite("stub")
        assert not report.ok
        assert len(report.failures) == 1
        assert report.failures[0].detail == "n is 2"

    def test_structural_flags_wrong_carrier(self):
        T = barycentric(trivial((1, 2, 3)))
        wrong = dict(T.vertex_carrier)
        apex = max(wrong)
        wrong[apex] = (1,)
        broken = Triangulation(T.base, T.total, wrong)
        problems: list[str] = []
        verify._structural(broken, 3, problems)
        assert problems

    def test_structural_quiet_on_sound_input(self):
        problems: list[str] = []
        ell = verify._structural(iterated_sd((1, 2, 3), 1), 3, problems)
        assert problems == []
        assert ell == (0, 1, 1)


class TestCaseValues:
    def test_second_sd_detail_carries_value(self):
        case = verify._case_cor_2sd({"n": 3})
        assert case.ok
        assert "13x+13x^2" in case.detail

    def test_counterexample_case(self):
        case = verify._case_esd_counterexample({})
        assert case.ok
        assert "not real-rooted" in case.detail

    def test_gamma_steps_follow_seed(self):
        report = run_suite("thm-sd", ns=(2,), seeds=(9,), steps=6)
        assert "steps=2" in report.cases[0].detail
