"""
HTML verification report generator.

This module renders a human-readable report of a verification run
through a jinja2 template.
"""

import os
from datetime import datetime, timezone
from typing import Optional

from jinja2 import Environment, FileSystemLoader, select_autoescape

from src.census.classify import CensusResult
from src.constants import APP_NAME, APP_TAGLINE, APP_VERSION, REPORT_STATUS_LABELS
from src.harness.results import Report, calculate_run_summary


def _environment() -> Environment:
    template_dir = os.path.join(os.path.dirname(__file__), "templates")
    env = Environment(
        loader=FileSystemLoader(template_dir),
        autoescape=select_autoescape(["html", "xml"]),
    )
    env.filters["format_number"] = lambda x: f"{x:,}" if isinstance(x, (int, float)) else x
    env.filters["status_label"] = lambda s: REPORT_STATUS_LABELS.get(s, s)
    return env


def generate_html_report(
    reports: list[Report],
    census_results: Optional[list[CensusResult]] = None,
    generated_at: Optional[str] = None,
) -> str:
    """
    Generate an HTML verification report.

    Args:
        reports: Reports in run order
        census_results: Optional census runs to append
        generated_at: Timestamp text; defaults to the current UTC time

    Returns:
        HTML report as string
    """
    template = _environment().get_template("report.html")

    if generated_at is None:
        generated_at = datetime.now(timezone.utc).strftime("%Y-%m-%d %H:%M:%S UTC")

    rows = [
        {
            "theorem": r.theorem,
            "anchor": r.anchor,
            "status": r.status,
            "params": ", ".join(f"{k}={v}" for k, v in sorted(r.params.items())),
            "instances_checked": r.instances_checked,
            "instances_filtered": r.instances_filtered,
            "elapsed_ms": r.elapsed_ms,
            "counterexamples": r.counterexamples,
            "notes": r.notes,
        }
        for r in reports
    ]

    return template.render(
        app_name=APP_NAME,
        app_version=APP_VERSION,
        app_tagline=APP_TAGLINE,
        generated_at=generated_at,
        summary=calculate_run_summary(reports),
        reports=rows,
        census_results=census_results or [],
    )


def generate_html_report_bytes(
    reports: list[Report],
    census_results: Optional[list[CensusResult]] = None,
) -> bytes:
    """
    Generate an HTML report as bytes for download.

    Args:
        reports: Reports in run order
        census_results: Optional census runs to append

    Returns:
        HTML report as UTF-8 bytes
    """
    return generate_html_report(reports, census_results).encode("utf-8")
