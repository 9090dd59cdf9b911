"""
Safe report export with formula injection prevention.

This module exports report tables to CSV and Excel with spreadsheet
formula escaping, and reports to line-delimited JSON.
"""

import io
import json
from typing import Any

import pandas as pd

from src.constants import (
    COUNTEREXAMPLE_SHEET_NAME,
    FORMULA_INJECTION_CHARS,
    REPORT_SHEET_NAME,
)
from src.harness.results import Report, report_to_dict
from src.reporting.summary import counterexamples_to_dataframe, reports_to_dataframe


def escape_formula_injection(value: Any) -> Any:
    """
    Escape values that could be interpreted as formulas in spreadsheet applications.

    Values starting with =, +, -, or @ are prefixed with a single quote
    to prevent formula execution.

    Args:
        value: The value to escape

    Returns:
        Escaped value (string values only; others returned unchanged)
    """
    if not isinstance(value, str):
        return value

    if value and value[0] in FORMULA_INJECTION_CHARS:
        return "'" + value

    return value


def escape_dataframe(df: pd.DataFrame) -> pd.DataFrame:
    """Copy of a DataFrame with every string cell escaped."""
    escaped_df = df.copy()
    for col in escaped_df.columns:
        if escaped_df[col].dtype == object:
            escaped_df[col] = escaped_df[col].apply(escape_formula_injection)
    return escaped_df


def export_to_csv(df: pd.DataFrame, escape_formulas: bool = True) -> bytes:
    """
    Export a DataFrame to CSV format.

    Args:
        df: The DataFrame to export
        escape_formulas: Whether to escape formula injection characters

    Returns:
        CSV content as UTF-8 bytes
    """
    df_to_export = escape_dataframe(df) if escape_formulas else df
    buffer = io.StringIO()
    df_to_export.to_csv(buffer, index=False)
    return buffer.getvalue().encode("utf-8")


def export_to_excel(
    dataframes: dict[str, pd.DataFrame],
    escape_formulas: bool = True,
) -> bytes:
    """
    Export DataFrames to a single Excel file, one sheet each.

    Args:
        dataframes: Dictionary mapping sheet names to DataFrames
        escape_formulas: Whether to escape formula injection characters

    Returns:
        Excel file content as bytes
    """
    buffer = io.BytesIO()

    with pd.ExcelWriter(buffer, engine="openpyxl") as writer:
        for sheet_name, df in dataframes.items():
            df_to_export = escape_dataframe(df) if escape_formulas else df
            # Excel limits sheet names to 31 characters
            df_to_export.to_excel(writer, sheet_name=sheet_name[:31], index=False)

    return buffer.getvalue()


def reports_to_csv(reports: list[Report]) -> bytes:
    return export_to_csv(reports_to_dataframe(reports))


def reports_to_excel(reports: list[Report]) -> bytes:
    """Workbook with a report sheet and a counterexample sheet."""
    return export_to_excel(
        {
            REPORT_SHEET_NAME: reports_to_dataframe(reports),
            COUNTEREXAMPLE_SHEET_NAME: counterexamples_to_dataframe(reports),
        }
    )


def reports_to_json(reports: list[Report], include_elapsed: bool = True) -> str:
    """
    Serialize reports as one JSON object per line.

    Keys are sorted so that identical runs give identical text apart from
    the elapsed time, which `include_elapsed=False` drops.

    Args:
        reports: Reports in run order
        include_elapsed: Whether to keep the elapsed_ms field

    Returns:
        Newline-terminated JSON lines
    """
    lines = [
        json.dumps(report_to_dict(report, include_elapsed), sort_keys=True, ensure_ascii=False)
        for report in reports
    ]
    return "".join(line + "\n" for line in lines)


def get_export_filename(base_name: str, extension: str) -> str:
    """
    Build a download filename.

    Args:
        base_name: Name stem, any extension is dropped
        extension: File extension including the dot

    Returns:
        Generated filename
    """
    if "." in base_name:
        base_name = base_name.rsplit(".", 1)[0]
    return f"{base_name}{extension}"
