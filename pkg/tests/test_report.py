from __future__ import annotations

import json

import pytest

from muposet.harness import (
    Mismatch,
    PropertyTally,
    VerificationReport,
    decode_report,
    encode_report,
    render_report,
    report_to_csv,
    report_to_text,
)


def _failing_report() -> VerificationReport:
    return VerificationReport(
        campaign="theorem4",
        parameters={"max_n": 6},
        total_checked=3,
        passed=2,
        failed=1,
        mismatches=[
            Mismatch(
                pi="2413",
                sigma=None,
                formula_value=3,
                oracle_value=-3,
                case_label="part6b",
            )
        ],
        runtime_ms=12,
        counters={"sign_violations": 1},
    )


def _passing_report() -> VerificationReport:
    return VerificationReport(
        campaign="lemmas",
        parameters={"max_n": 5},
        total_checked=7,
        passed=7,
        failed=0,
        mismatches=[],
        runtime_ms=3,
        properties={
            "lemma1": PropertyTally(checked=4, failed=0),
            "basis": PropertyTally(checked=3, failed=0),
        },
    )


def test_json_round_trip() -> None:
    report = _failing_report()
    assert decode_report(encode_report(report)) == report


def test_json_omits_empty_sections() -> None:
    doc = json.loads(encode_report(_failing_report()))
    assert "properties" not in doc
    assert doc["counters"] == {"sign_violations": 1}
    assert doc["mismatches"][0]["sigma"] is None
    assert doc["total_checked"] == 3


def test_report_totals_are_enforced() -> None:
    with pytest.raises(ValueError, match="total_checked"):
        VerificationReport(
            campaign="basis",
            parameters={},
            total_checked=3,
            passed=1,
            failed=1,
            mismatches=[],
            runtime_ms=0,
        )
    with pytest.raises(ValueError, match="mismatches"):
        VerificationReport(
            campaign="basis",
            parameters={},
            total_checked=2,
            passed=1,
            failed=1,
            mismatches=[],
            runtime_ms=0,
        )


def test_csv_has_summary_header_and_blank_nones() -> None:
    lines = report_to_csv(_failing_report()).splitlines()
    assert lines[0] == "# campaign=theorem4 total=3 passed=2 failed=1"
    assert lines[1] == "pi,sigma,formula_value,oracle_value,case_label"
    assert lines[2] == "2413,,3,-3,part6b"
    assert len(lines) == 3


def test_text_report_lists_failures() -> None:
    text = report_to_text(_failing_report())
    first = text.splitlines()[0]
    assert first == "campaign theorem4 (max_n=6): FAILED"
    assert "checked 3, passed 2, failed 1 in 12 ms" in text
    assert "sign_violations: 1" in text
    assert "part6b" in text
    assert "2413" in text


def test_text_report_shows_property_tallies() -> None:
    text = report_to_text(_passing_report())
    assert text.startswith("campaign lemmas (max_n=5): ok")
    assert "lemma1" in text
    assert "basis" in text
    assert "formula_value" not in text


def test_render_dispatches_on_format() -> None:
    report = _passing_report()
    assert render_report(report, "json").endswith("}\n")
    assert json.loads(render_report(report, "json"))["campaign"] == "lemmas"
    assert render_report(report, "csv") == report_to_csv(report)
    assert render_report(report, "text") == report_to_text(report)
