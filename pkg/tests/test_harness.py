"""Tests for check tallies, the check registry and the runner."""

import pytest

from src.config.schema import RunConfig
from src.constants import STATUS_FAIL, STATUS_PASS, STATUS_UNKNOWN
from src.games.constructions import GAME_GA
from src.games.core import STAR, ZERO
from src.harness.checks import THEOREM_CHECKS
from src.harness.results import (
    MAX_COUNTEREXAMPLES,
    CheckTally,
    Report,
    calculate_run_summary,
    report_to_dict,
)
from src.harness.runner import (
    UnknownCheckError,
    params_for,
    resolve_params,
    run_all,
    run_check,
    selected_checks,
)


class TestCheckTally:
    def test_passing_instances(self):
        tally = CheckTally()
        tally.record(True, ZERO, "N", "N")
        tally.record(True, STAR, "P", "P")
        assert tally.instances == 2
        assert tally.status() == STATUS_PASS

    def test_counterexample_in_brace_notation(self):
        tally = CheckTally()
        tally.record(False, GAME_GA, "L", "R", h=ZERO, x=STAR)
        assert tally.status() == STATUS_FAIL
        counterexample = tally.counterexamples[0]
        assert counterexample.g == "{0|{0|0}}"
        assert counterexample.h == "0"
        assert counterexample.x == "{0|0}"
        assert (counterexample.expected, counterexample.got) == ("L", "R")

    def test_counterexamples_are_capped(self):
        tally = CheckTally()
        for _ in range(MAX_COUNTEREXAMPLES + 10):
            tally.record(False, ZERO, "P", "N")
        assert tally.instances == MAX_COUNTEREXAMPLES + 10
        assert len(tally.counterexamples) == MAX_COUNTEREXAMPLES

    def test_unresolved_and_filtered(self):
        tally = CheckTally()
        tally.skip()
        tally.unresolved_instance("no witness born by 2")
        assert tally.status() == STATUS_UNKNOWN
        assert tally.filtered == 1
        assert tally.notes == ["no witness born by 2"]

        tally.record(False, ZERO, "P", "N")
        assert tally.status() == STATUS_FAIL

    def test_to_report(self):
        tally = CheckTally()
        tally.record(True, ZERO, "N", "N")
        report = tally.to_report("outcomes", "anchor text", {"x_bound": 1}, elapsed_ms=5)
        assert report.theorem == "outcomes"
        assert report.params == {"x_bound": 1}
        assert report.instances_checked == 1
        assert report.elapsed_ms == 5


class TestReportSerialization:
    def test_keys(self):
        report = Report("il", "anchor", {"x_bound": 2}, STATUS_PASS, 4, elapsed_ms=3)
        data = report_to_dict(report)
        assert set(data) == {
            "theorem",
            "anchor",
            "params",
            "status",
            "instances_checked",
            "instances_filtered",
            "counterexamples",
            "elapsed_ms",
        }
        assert "elapsed_ms" not in report_to_dict(report, include_elapsed=False)

    def test_run_summary(self):
        reports = [
            Report("a", "", {}, STATUS_PASS, 3),
            Report("b", "", {}, STATUS_FAIL, 2),
            Report("c", "", {}, STATUS_UNKNOWN, 1),
        ]
        assert calculate_run_summary(reports) == {
            "total": 3,
            "passed": 1,
            "failed": 1,
            "unknown": 1,
            "instances": 6,
        }


class TestRegistry:
    def test_every_check_is_described(self):
        assert len(THEOREM_CHECKS) >= 25
        for check_id, check in THEOREM_CHECKS.items():
            assert check.id == check_id
            assert check.anchor
            assert callable(check.runner)

    def test_resolve_params(self):
        assert resolve_params("ggir") == {"g_bound": 2, "i": 2}
        assert resolve_params("ggir", {"i": 3, "unused": 1}) == {"g_bound": 2, "i": 3}
        with pytest.raises(UnknownCheckError):
            resolve_params("no-such-check")


class TestRunner:
    def test_run_check(self):
        report = run_check("outcomes")
        assert report.status == STATUS_PASS
        assert report.anchor == THEOREM_CHECKS["outcomes"].anchor
        assert report.params == {"x_bound": 3}
        assert report.instances_checked > 0

    def test_unknown_check(self):
        with pytest.raises(UnknownCheckError):
            run_check("no-such-check")

    def test_selected_checks_follow_registry_order(self):
        config = RunConfig(checks=["z-gt-zero", "outcomes"])
        assert selected_checks(config) == ["outcomes", "z-gt-zero"]
        assert selected_checks(RunConfig()) == list(THEOREM_CHECKS)
        with pytest.raises(UnknownCheckError):
            selected_checks(RunConfig(checks=["outcomes", "nope"]))

    def test_params_precedence(self):
        config = RunConfig(
            seed=5,
            global_overrides={"g_bound": 1, "i": 1},
            bounds={"ggir": {"g_bound": 2}},
        )
        assert params_for("ggir", config) == {"seed": 5, "g_bound": 2, "i": 1}
        assert resolve_params("ggir", params_for("ggir", config)) == {"g_bound": 2, "i": 1}

    def test_workers_do_not_change_results(self):
        checks = ["outcomes", "il", "z-gt-zero"]
        sequential = run_all(RunConfig(checks=checks))
        threaded = run_all(RunConfig(checks=checks, workers=3))
        assert [r.theorem for r in sequential] == [r.theorem for r in threaded] == checks
        assert [(r.status, r.instances_checked) for r in sequential] == [
            (r.status, r.instances_checked) for r in threaded
        ]


@pytest.mark.parametrize(
    "check_id, params",
    [
        ("outcomes", {"x_bound": 2}),
        ("il", {"x_bound": 2}),
        ("ggir", {"g_bound": 1, "i": 1}),
        ("ggir-corollary", {"g_bound": 1, "i": 1}),
        ("adjoint-sum", {"g_bound": 1}),
        ("companions", {"g_bound": 1}),
        ("adjoint-dicot", {"g_bound": 1, "binary_bound": 2}),
        ("adjout", {"binary_bound": 2}),
        ("adjiout", {"binary_bound": 2}),
        ("tilde-sum", {"binary_bound": 2}),
        ("z-gt-zero", {"dist_bound": 2}),
        ("carac-preconditions", {}),
        ("i-counterexamples", {"x_bound": 2}),
        ("di-ext", {"x_bound": 2, "max_n": 1}),
        ("canonical-impartial", {"bound": 2, "dist_bound": 2}),
    ],
)
def test_small_checks_pass(check_id, params):
    report = run_check(check_id, params)
    assert report.status == STATUS_PASS, report.counterexamples


@pytest.mark.parametrize("check_id", list(THEOREM_CHECKS))
def test_every_check_passes_at_default_bounds(check_id):
    report = run_check(check_id)
    assert report.status == STATUS_PASS, (report.counterexamples, report.notes)
    assert report.instances_checked > 0


@pytest.mark.parametrize("check_id", ["b2d0", "b2d", "b2db", "i2d"])
def test_dicot_checks_also_search_sampled_day_three_games(check_id):
    params = resolve_params(check_id)
    assert params["sample_bound"] == 3
    assert params["dist_samples"] > 0


def test_zero_characterisation_check_samples_200_games():
    assert resolve_params("b2d0")["samples"] == 200


@pytest.mark.parametrize(
    "check_id, label",
    [
        ("il", "Theorem IL"),
        ("ggir", "Theorem GGiR"),
        ("adjoint-sum", "Proposition adjointsum"),
        ("z-gt-zero", "Proposition Z>0"),
        ("b2d0", "Theorem B=>D0"),
        ("b2db", "Theorem B=>Db"),
        ("i2d", "Theorem I=>D"),
        ("canonical-impartial", "Theorem revsimp"),
    ],
)
def test_anchor_names_the_result(check_id, label):
    assert THEOREM_CHECKS[check_id].anchor.startswith(label)
