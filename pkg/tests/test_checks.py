"""The named property checks and their reports."""

import pytest

from lpsem import GenerationError, PROPERTY_NAMES, run_check
from lpsem.checks import CheckFailure, CheckReport


def test_every_property_passes_a_small_run():
    for name in PROPERTY_NAMES:
        report = run_check(name, instances=8, seed=11)
        assert report.passed, f"{name}: {report.to_text()}"
        assert report.property_name == name
        assert report.instances == 8


def test_unknown_property_rejected():
    with pytest.raises(ValueError):
        run_check("prop9-unknown", instances=5, seed=0)


def test_zero_instances_trivially_pass():
    for name in PROPERTY_NAMES:
        report = run_check(name, instances=0, seed=0)
        assert report.passed and not report.failures


def test_prop2_reports_the_converse_witness():
    report = run_check("prop2-as-implies-nmodel", instances=1, seed=0)
    assert report.passed
    assert any("{p, -q}" in note for note in report.notes)


def test_report_pass_flag_tracks_failures():
    report = CheckReport("demo", 1, [CheckFailure("p.", "{}", "x", "y")])
    assert not report.passed
    assert "FAIL" in report.to_text()
    payload = report.to_json()
    assert payload["passed"] is False
    assert payload["failures"][0]["expected"] == "x"


def test_reports_are_deterministic():
    a = run_check("theorem2-correspondence", instances=5, seed=3).to_text()
    b = run_check("theorem2-correspondence", instances=5, seed=3).to_text()
    assert a == b


def test_class_override_allowed_where_sensible():
    report = run_check("prop4-wc-answersets", 5, seed=2, program_class="wc_normal")
    assert report.passed


def test_class_override_rejected_for_locked_properties():
    with pytest.raises(GenerationError):
        run_check("theorem2-correspondence", 5, seed=2, program_class="regular")


def test_negative_instances_rejected():
    with pytest.raises(ValueError):
        run_check("prop1-closed-nmodel", instances=-1, seed=0)
