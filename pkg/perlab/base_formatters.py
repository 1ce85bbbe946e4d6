"""
base_formatters.py
===================

The formatters used to show check reports.

A formatter takes the list of reports produced by ``run_checks`` and the
budget they were produced under, and returns a single string, which is
written out by ``emit_report``.

This module contains 2 formatters:

* ``text()``: a human readable table, one line per check, followed by
  the witness and any details of checks that did not pass.

* ``json_report()``: the stable schema
  ``{version, budget: {universe, fuel}, checks: [...]}``, with sorted
  keys, so that two runs on the same input give byte-identical output.
"""

import json
from typing import Callable, Dict, List, Optional, Sequence

from . import config, debug_helper
from .lab_gettext import current_lang
from .pers import Budget
from .typing_info import ReportInfo
from .verdicts import CheckReport

_ = current_lang.translate

REPORT_VERSION = 1

status_marks = {"pass": "ok", "fail": "FAIL", "undecided": "??"}


def report_info(
    reports: Sequence[CheckReport], budget: Budget, timings: bool = False
) -> ReportInfo:
    return {
        "version": REPORT_VERSION,
        "budget": budget.info(),
        "checks": [report.as_info(timings) for report in reports],
    }


def json_report(
    reports: Sequence[CheckReport], budget: Budget, timings: bool = False
) -> str:
    info = report_info(reports, budget, timings)
    return json.dumps(info, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def text(reports: Sequence[CheckReport], budget: Budget, timings: bool = False) -> str:
    lines: List[str] = [_("Budget: {budget}").format(budget=budget)]
    width = max((len(report.name) for report in reports), default=0)
    for report in reports:
        info = report.as_info(timings)
        line = f"  {status_marks[info['status']]:<4} {report.name:<{width}}"
        line += "  " + _("checked {n}").format(n=info["checked"])
        if info["excluded_by_fuel"]:
            line += ", " + _("{n} excluded by fuel").format(n=info["excluded_by_fuel"])
        if info["ms"] is not None:
            line += f", {info['ms']} ms"
        lines.append(line.rstrip())
        if info["witness"] is not None:
            lines.append("         " + info["witness"])
        for detail in report.verdict.details:
            lines.append("         " + detail)

    counts: Dict[str, int] = {"pass": 0, "fail": 0, "undecided": 0}
    for report in reports:
        counts[report.status] += 1
    lines.append(
        _("{passed} passed, {failed} failed, {undecided} undecided").format(
            passed=counts["pass"], failed=counts["fail"], undecided=counts["undecided"]
        )
    )
    return "\n".join(lines) + "\n"


formatters: Dict[str, Callable[[Sequence[CheckReport], Budget, bool], str]] = {
    "text": text,
    "json": json_report,
}


def emit_report(
    reports: Sequence[CheckReport],
    report_format: Optional[str] = None,
    budget: Optional[Budget] = None,
) -> str:
    """Formats ``reports`` and writes them with ``config.session.write_out``.

    The budget defaults to the one shared by the reports, or the session
    budget when there are none.
    """
    if report_format is None:
        report_format = config.session.format
    if budget is None:
        budget = reports[0].budget if reports else config.session.budget()
    if report_format not in formatters:
        raise ValueError(
            _("{fmt}: unknown report format; use text or json.").format(fmt=report_format)
        )
    debug_helper.log(f"emitting {len(reports)} reports as {report_format}")
    output = formatters[report_format](reports, budget, config.session.timings)
    config.session.write_out(output)
    return output
