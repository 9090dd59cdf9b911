"""
Verification run summaries.

This module turns check reports and census results into pandas tables
for display and export, and into plain-text blocks for the terminal.
"""

from typing import Any

import pandas as pd

from src.census.classify import CensusResult
from src.constants import REPORT_STATUS_LABELS, STATUS_FAIL, STATUS_UNKNOWN
from src.harness.results import Report, calculate_run_summary

REPORT_COLUMNS = [
    "theorem",
    "status",
    "instances_checked",
    "instances_filtered",
    "counterexamples",
    "elapsed_ms",
    "params",
    "anchor",
]

COUNTEREXAMPLE_COLUMNS = ["theorem", "g", "h", "x", "expected", "got"]


def _format_params(params: dict[str, Any]) -> str:
    return ", ".join(f"{key}={value}" for key, value in sorted(params.items()))


def reports_to_dataframe(reports: list[Report]) -> pd.DataFrame:
    """
    Build a table with one row per report.

    Args:
        reports: Reports in run order

    Returns:
        DataFrame with REPORT_COLUMNS
    """
    rows = [
        {
            "theorem": report.theorem,
            "status": report.status,
            "instances_checked": report.instances_checked,
            "instances_filtered": report.instances_filtered,
            "counterexamples": len(report.counterexamples),
            "elapsed_ms": report.elapsed_ms,
            "params": _format_params(report.params),
            "anchor": report.anchor,
        }
        for report in reports
    ]
    return pd.DataFrame(rows, columns=REPORT_COLUMNS)


def counterexamples_to_dataframe(reports: list[Report]) -> pd.DataFrame:
    """
    Build a table with one row per counterexample across all reports.

    Args:
        reports: Reports in run order

    Returns:
        DataFrame with COUNTEREXAMPLE_COLUMNS (empty when every check passed)
    """
    rows = [
        {
            "theorem": report.theorem,
            "g": c.g,
            "h": c.h,
            "x": c.x,
            "expected": c.expected,
            "got": c.got,
        }
        for report in reports
        for c in report.counterexamples
    ]
    return pd.DataFrame(rows, columns=COUNTEREXAMPLE_COLUMNS)


def census_to_dataframe(results: list[CensusResult]) -> pd.DataFrame:
    """One row per census run."""
    rows = [
        {
            "census": result.name,
            "trees": result.trees,
            "classes": result.classes,
            "expected_classes": result.expected_classes,
            "minimal_members": result.minimal_members,
            "flagged": result.flagged,
        }
        for result in results
    ]
    return pd.DataFrame(
        rows,
        columns=["census", "trees", "classes", "expected_classes", "minimal_members", "flagged"],
    )


def format_run_summary(reports: list[Report]) -> str:
    """
    Format a plain-text summary of a verification run.

    Args:
        reports: Reports in run order

    Returns:
        One line per report followed by totals
    """
    lines = []
    width = max((len(r.theorem) for r in reports), default=0)
    for report in reports:
        label = REPORT_STATUS_LABELS.get(report.status, report.status)
        line = (
            f"{report.theorem.ljust(width)}  {label:<17} "
            f"{report.instances_checked:>7} checked"
        )
        if report.instances_filtered:
            line += f", {report.instances_filtered} filtered"
        if report.counterexamples:
            line += f", {len(report.counterexamples)} counterexamples"
        lines.append(line)

        if report.status == STATUS_FAIL:
            first = report.counterexamples[0]
            lines.append(
                f"    first: g={first.g} h={first.h} x={first.x} "
                f"expected {first.expected}, got {first.got}"
            )
        elif report.status == STATUS_UNKNOWN and report.notes:
            lines.append(f"    {report.notes[0]}")

    totals = calculate_run_summary(reports)
    lines.append("")
    lines.append(
        f"{totals['total']} checks: {totals['passed']} passed, "
        f"{totals['failed']} failed, {totals['unknown']} unknown "
        f"({totals['instances']} instances)"
    )
    return "\n".join(lines)


def format_census_result(result: CensusResult) -> str:
    """Plain-text block for one census run."""
    lines = [
        f"Census {result.name}",
        f"  trees:           {result.trees}",
        f"  classes:         {result.classes}",
    ]
    if result.expected_classes is not None:
        lines.append(f"  expected:        {result.expected_classes}")
    if result.minimal_members:
        lines.append(f"  minimal members: {result.minimal_members}")
    if result.flagged:
        lines.append("  FLAGGED: counts differ from the expected values")
    for note in result.notes:
        lines.append(f"  note: {note}")
    return "\n".join(lines)
