"""
Verify page.

Run theorem checks, review their reports and download them.
"""

from typing import Optional

import streamlit as st

from src.census.enumerate import ResourceCeilingError
from src.config.parser import parse_yaml_config, serialize_config_to_yaml
from src.config.schema import RunConfig
from src.config.validator import format_validation_errors, validate_run_config
from src.file_handling.export import get_export_filename, reports_to_csv, reports_to_excel, reports_to_json
from src.harness.checks import THEOREM_CHECKS
from src.harness.results import Report, calculate_run_summary
from src.harness.runner import run_all
from src.reporting.html_report import generate_html_report_bytes
from src.reporting.summary import counterexamples_to_dataframe, reports_to_dataframe
from src.ui.components import (
    download_button_styled,
    error_box,
    metric_card,
    page_header,
    success_box,
    warning_box,
)


def render_page_verify() -> None:
    """Render the Verify page."""
    page_header("Verify", "Run the theorem checks over enumerated spaces of small games.")

    config = _config_from_upload()
    if config is None:
        return

    selected = st.multiselect(
        "Checks",
        list(THEOREM_CHECKS),
        default=[c for c in config.checks if c in THEOREM_CHECKS] or ["outcomes", "il", "adjoint-sum"],
        format_func=lambda c: f"{c}: {THEOREM_CHECKS[c].anchor}",
    )
    config.checks = selected
    config.workers = int(st.number_input("Workers", min_value=1, max_value=16, value=config.workers))

    validation = validate_run_config(config)
    if not validation.is_valid:
        error_box(format_validation_errors(validation))
        return

    with st.expander("Run configuration (YAML)"):
        st.code(serialize_config_to_yaml(config), language="yaml")

    if st.button("Run checks", type="primary", disabled=not selected):
        try:
            with st.spinner("Running checks..."):
                st.session_state["verify_reports"] = run_all(config)
        except ResourceCeilingError as e:
            error_box(str(e))
            return

    reports = st.session_state.get("verify_reports")
    if reports:
        _render_reports(reports)


def _config_from_upload() -> Optional[RunConfig]:
    uploaded = st.file_uploader("Run configuration (optional)", type=["yaml", "yml"])
    if uploaded is None:
        st.session_state["report_stem"] = "reports"
        return RunConfig()
    st.session_state["report_stem"] = uploaded.name

    config, error = parse_yaml_config(uploaded.getvalue().decode("utf-8", errors="replace"))
    if error:
        error_box(error)
        return None
    return config


def _render_reports(reports: list[Report]) -> None:
    totals = calculate_run_summary(reports)

    col1, col2, col3, col4 = st.columns(4)
    with col1:
        metric_card("Checks", totals["total"])
    with col2:
        metric_card("Passed", totals["passed"])
    with col3:
        metric_card("Failed", totals["failed"])
    with col4:
        metric_card("Unknown", totals["unknown"])

    if totals["failed"]:
        warning_box("Some checks found counterexamples.")
    else:
        success_box(f"No counterexamples in {totals['instances']:,} instances.")

    st.dataframe(reports_to_dataframe(reports), use_container_width=True, hide_index=True)

    counterexamples = counterexamples_to_dataframe(reports)
    if len(counterexamples) > 0:
        st.markdown("#### Counterexamples")
        st.dataframe(counterexamples, use_container_width=True, hide_index=True)

    st.markdown("#### Downloads")
    stem = st.session_state.get("report_stem") or "reports"
    col1, col2, col3, col4 = st.columns(4)
    with col1:
        download_button_styled("CSV", reports_to_csv(reports), get_export_filename(stem, ".csv"), "text/csv")
    with col2:
        download_button_styled(
            "Excel",
            reports_to_excel(reports),
            get_export_filename(stem, ".xlsx"),
            "application/vnd.openxmlformats-officedocument.spreadsheetml.sheet",
        )
    with col3:
        download_button_styled(
            "JSON lines",
            reports_to_json(reports).encode("utf-8"),
            get_export_filename(stem, ".jsonl"),
            "application/json",
        )
    with col4:
        download_button_styled(
            "HTML report", generate_html_report_bytes(reports), get_export_filename(stem, ".html"), "text/html"
        )
