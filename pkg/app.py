"""
Misère Workbench

Main Streamlit application entry point.

This application allows users to:
- Parse games and inspect their misère and normal outcomes
- Build adjoints, tilde games and outcome companions
- Compare games modulo dicot, binary and impartial universes
- Run the theorem checks and download their reports
- Enumerate small game spaces and count equivalence classes
"""

import streamlit as st

from src.constants import APP_NAME, APP_TAGLINE, APP_VERSION, STATUS_FAIL, UI_PAGES
from src.session import (
    get_current_page,
    initialize_session_state,
    reset_session_state,
    set_current_page,
)
from src.ui.page_census import render_page_census
from src.ui.page_compare import render_page_compare
from src.ui.page_explore import render_page_explore
from src.ui.page_verify import render_page_verify
from src.ui.theme import BRAND_GRAY_BG, BRAND_SLATE, get_custom_css

PAGE_RENDERERS = {
    "explore": render_page_explore,
    "compare": render_page_compare,
    "verify": render_page_verify,
    "census": render_page_census,
}


def main():
    """Main application entry point."""
    st.set_page_config(
        page_title=APP_NAME,
        page_icon="MW",
        layout="wide",
        initial_sidebar_state="expanded",
    )

    st.markdown(get_custom_css(), unsafe_allow_html=True)

    initialize_session_state()

    _render_sidebar()

    st.markdown(
        f'<h1 class="mw-header">{APP_NAME}</h1>'
        f'<p class="mw-tagline">{APP_TAGLINE}</p>',
        unsafe_allow_html=True,
    )

    page_key = get_current_page()
    renderer = PAGE_RENDERERS.get(page_key)
    if renderer is None:
        st.error(f"Unknown page: {page_key}")
        set_current_page(UI_PAGES[0]["key"])
        st.rerun()
    renderer()


def _render_sidebar():
    """Render the application sidebar."""
    with st.sidebar:
        st.markdown(f"**{APP_NAME}**  \nv{APP_VERSION}")

        current = get_current_page()
        for page in UI_PAGES:
            if page["key"] == current:
                st.markdown(
                    f'<div style="background-color: {BRAND_GRAY_BG}; padding: 6px 12px; '
                    f'border-left: 3px solid {BRAND_SLATE}; margin: 4px 0; font-weight: 600;">'
                    f'{page["name"]}</div>',
                    unsafe_allow_html=True,
                )
            elif st.button(page["name"], key=f"nav_{page['key']}", help=page["description"], use_container_width=True):
                set_current_page(page["key"])
                st.rerun()

        st.markdown("---")
        _render_status_summary()

        st.markdown("---")
        if st.button("Clear Session", use_container_width=True, help="Forget parsed games and reports"):
            reset_session_state()
            st.rerun()


def _render_status_summary():
    """Render a quick status summary in the sidebar."""
    st.markdown("### Status")

    text = st.session_state.get("last_game_text")
    if st.session_state.get("last_game") is not None and text:
        display = text[:24] + "..." if len(text) > 24 else text
        st.markdown(f"**Game:** `{display}`")
    else:
        st.markdown("*No game parsed*")

    verdict = st.session_state.get("last_verdict")
    if verdict is not None:
        st.markdown(f"**Last comparison:** {verdict.status}")

    reports = st.session_state.get("verify_reports")
    if reports:
        failed = sum(1 for r in reports if r.status == STATUS_FAIL)
        st.markdown(f"**Checks run:** {len(reports)} ({failed} failed)")
    else:
        st.markdown("*No checks run*")


if __name__ == "__main__":
    main()
