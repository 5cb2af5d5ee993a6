"""Text and JSON rendering of verification reports."""
from typing import List

from skeinlab.models.report import AggregateReport, CheckRecord


def format_check(suite: str, check: CheckRecord) -> str:
    params = ', '.join(f"{k}={v}" for k, v in check.parameters.items())
    line = f"{'PASS' if check.passed else 'FAIL'} {suite}: {check.identity}"
    if params:
        line += f" [{params}]"
    line += f" residual={check.residual}"
    if check.wall_time is not None:
        line += f" time={check.wall_time:.6f}s"
    return line


def render_text(report: AggregateReport) -> str:
    lines: List[str] = []
    for suite in report.suites:
        for check in suite.checks:
            lines.append(format_check(suite.suite, check))
    lines.append(f"{report.passed} passed, {report.failed} failed")
    return '\n'.join(lines)


def render_json(report: AggregateReport) -> str:
    return report.model_dump_json(indent=2, exclude_none=True)
