import json

import pytest

from perlab import config
from perlab.base_formatters import emit_report, json_report, text
from perlab.verdicts import CheckReport, Verdict

from tests.fixtures import TINY

REPORTS = [
    CheckReport("(subper A B)", Verdict.passed(2), TINY, ms=7),
    CheckReport("(subper B A)", Verdict.failed("1 is in B but not in A", 2), TINY, ms=3),
    CheckReport("(morphism 96 X X)", Verdict.undecided("96·96: out of fuel"), TINY, ms=0),
]


def test_json_schema():
    info = json.loads(json_report(REPORTS, TINY))
    assert info["version"] == 1
    assert info["budget"] == {"universe": "terms:1", "fuel": 2000}
    assert [check["status"] for check in info["checks"]] == ["pass", "fail", "undecided"]
    assert info["checks"][1] == {
        "name": "(subper B A)",
        "status": "fail",
        "witness": "1 is in B but not in A",
        "checked": 2,
        "excluded_by_fuel": 0,
        "ms": None,
    }
    assert info["checks"][2]["excluded_by_fuel"] == 1


def test_json_is_stable():
    first = json_report(REPORTS, TINY)
    assert first == json_report(list(REPORTS), TINY)
    assert first.index('"budget"') < first.index('"checks"') < first.index('"version"')
    assert first.endswith("}\n")


def test_timings_only_on_request():
    info = json.loads(json_report(REPORTS, TINY, timings=True))
    assert [check["ms"] for check in info["checks"]] == [7, 3, 0]


def test_empty_report():
    info = json.loads(json_report([], TINY))
    assert info["checks"] == []


def test_text():
    result = text(REPORTS, TINY)
    lines = result.splitlines()
    assert lines[0] == "Budget: terms:1, fuel 2000"
    assert lines[1].startswith("  ok ")
    assert "(subper A B)" in lines[1]
    assert lines[2].startswith("  FAIL")
    assert lines[3].strip() == "1 is in B but not in A"
    assert "1 excluded by fuel" in lines[4]
    assert lines[-1] == "1 passed, 1 failed, 1 undecided"
    assert " ms" not in result


def test_emit_report_writes_out():
    config.session.set_redirect("capture")
    try:
        returned = emit_report(REPORTS, "json")
        assert config.session.get_captured() == returned
        assert json.loads(returned)["budget"]["fuel"] == 2000
    finally:
        config.session.set_redirect(None)


def test_emit_report_unknown_format():
    with pytest.raises(ValueError):
        emit_report(REPORTS, "xml")
