"""
Session state for the Streamlit workbench.

Every page reads and writes `st.session_state` directly; this module only
seeds the keys they share and tracks the selected page.
"""

import streamlit as st

from src.constants import UI_PAGES

SESSION_DEFAULTS = {
    "current_page": UI_PAGES[0]["key"],
    # Explore
    "last_game_text": "0",
    "last_game": None,
    # Compare: verdict plus the (g, h, universe, bound) it was computed for
    "last_verdict": None,
    "last_comparison": None,
    # Verify: reports and the stem their downloads are named after
    "verify_reports": None,
    "report_stem": "reports",
    # Census
    "census_results": [],
}


def initialize_session_state() -> None:
    """Seed every missing key with its default. Called on every render."""
    for key, default_value in SESSION_DEFAULTS.items():
        if key not in st.session_state:
            st.session_state[key] = list(default_value) if isinstance(default_value, list) else default_value


def reset_session_state() -> None:
    """Clear all session state and reset to defaults."""
    for key in list(st.session_state.keys()):
        del st.session_state[key]
    initialize_session_state()


def set_current_page(page_key: str) -> None:
    """
    Set the current page.

    Args:
        page_key: A key from UI_PAGES; unknown keys fall back to the first page
    """
    keys = [page["key"] for page in UI_PAGES]
    st.session_state["current_page"] = page_key if page_key in keys else keys[0]


def get_current_page() -> str:
    return st.session_state.get("current_page", UI_PAGES[0]["key"])
