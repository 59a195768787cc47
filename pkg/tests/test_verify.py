"""Tests for the verification harness and report rendering."""

import json

import pytest

from drinfeld.errors import UnknownCheckName, UnsupportedQ
from drinfeld.verify import (
    CHECK_NAMES,
    CheckResult,
    Report,
    emit,
    render_json,
    render_text,
    report_to_dict,
    run_all,
)

_reports = {}


def report_for(q):
    if q not in _reports:
        _reports[q] = run_all(q)
    return _reports[q]


def test_all_checks_pass_small_q():
    for q in (2, 3, 5):
        report = report_for(q)
        assert report.overall == "pass"
        assert [c.name for c in report.checks] == list(CHECK_NAMES)
        assert all(c.status == "pass" for c in report.checks)


def test_declared_order_is_stable():
    assert CHECK_NAMES == (
        "structure",
        "curve-geometry",
        "dl-orthogonality",
        "canonical-decomposition",
        "lefschetz-identity",
        "dl-decomposition-pattern",
        "dl-vs-induction",
        "gelfand-graev-decomposition",
        "regular-decomposition",
        "canonical-self-duality",
    )


def test_canonical_vector_q2():
    report = report_for(2)
    check = next(c for c in report.checks if c.name == "canonical-decomposition")
    assert check.details["coordinates"]["computed"] == [1, 0]


def test_gelfand_graev_vector_q5():
    report = report_for(5)
    check = next(
        c for c in report.checks if c.name == "gelfand-graev-decomposition"
    )
    assert check.details["gamma_1"]["computed"] == [1, 2, 2, 2, 1]
    assert check.details["gamma_2"]["computed"] == [1, 2, 2, 2, 1]


def test_representative_independence_reported():
    report = report_for(5)
    check = next(c for c in report.checks if c.name == "structure")
    assert check.details["gelfand_graev_representative_independent"] is True


def test_unsupported_q():
    for q in (1, 6, 10, 12):
        with pytest.raises(UnsupportedQ):
            run_all(q)
    with pytest.raises(UnsupportedQ):
        run_all(13)  # only available behind the slow flag


def test_selection_subset_marks_rest_skipped():
    report = run_all(2, ["curve-geometry"])
    by_name = {c.name: c for c in report.checks}
    assert by_name["curve-geometry"].status == "pass"
    skipped = [c for c in report.checks if c.status == "skipped"]
    assert len(skipped) == len(CHECK_NAMES) - 1
    assert report.overall == "pass"


def test_unknown_check_name():
    with pytest.raises(UnknownCheckName):
        run_all(2, ["no-such-check"])


def test_empty_selection_rejected():
    with pytest.raises(AssertionError):
        run_all(2, [])


def test_stable_json_is_deterministic():
    a = render_json(run_all(2), stable=True)
    b = render_json(run_all(2), stable=True)
    assert a == b


def test_json_round_trips_canonically():
    rendered = render_json(report_for(3), stable=True)
    parsed = json.loads(rendered)
    assert json.dumps(parsed, sort_keys=True, indent=2) + "\n" == rendered
    assert parsed["overall"] == "pass"
    assert parsed["q"] == 3
    assert parsed["p"] == 3
    assert "version" in parsed


def test_stable_mode_omits_elapsed():
    with_time = report_to_dict(report_for(2), stable=False)
    without = report_to_dict(report_for(2), stable=True)
    assert all("elapsed_ms" in c for c in with_time["checks"])
    assert all("elapsed_ms" not in c for c in without["checks"])


def test_text_rendering():
    text = render_text(report_for(2))
    assert "PASS  structure" in text
    assert text.rstrip().endswith("overall: pass")


def test_emit_exit_codes(tmp_path):
    target = tmp_path / "report.json"
    code = emit(report_for(2), format="json", destination=str(target), stable=True)
    assert code == 0
    assert json.loads(target.read_text())["overall"] == "pass"

    failing = Report(
        q=2,
        p=2,
        checks=[CheckResult("structure", "fail", {}, 0.0)],
        overall="fail",
        version="0",
    )
    assert emit(failing, format="json", destination=str(target)) == 1
