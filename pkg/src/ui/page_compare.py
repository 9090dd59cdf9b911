"""
Compare page.

Decide G >= H modulo a universe and show the witness of a refutation.
"""

import streamlit as st

from src.census.enumerate import ResourceCeilingError
from src.comparison.dispatch import compare
from src.comparison.universe import UniverseSpec
from src.constants import (
    DEFAULT_COMPARE_BOUND,
    FILTER_BINARY_DICOT,
    PRINT_STYLE_NAMED,
    UNIVERSE_FILTER_LABELS,
    UNIVERSE_FILTERS,
)
from src.games.core import add
from src.games.notation import print_game
from src.games.solver import misere_outcome
from src.ui.components import (
    error_box,
    game_block,
    game_input,
    get_help_text,
    info_box,
    outcome_line,
    page_header,
    status_badge,
)


def render_page_compare() -> None:
    """Render the Compare page."""
    page_header("Compare", "Decide whether G >= H modulo a universe of games.")

    col1, col2 = st.columns(2)
    with col1:
        g = game_input("G", key="compare_g", default="Z")
    with col2:
        h = game_input("H", key="compare_h", default="0")

    col3, col4 = st.columns(2)
    with col3:
        universe_filter = st.selectbox(
            "Universe",
            UNIVERSE_FILTERS,
            index=UNIVERSE_FILTERS.index(FILTER_BINARY_DICOT),
            format_func=lambda f: UNIVERSE_FILTER_LABELS[f],
            help=get_help_text("universe"),
        )
    with col4:
        bound = st.number_input(
            "Distinguisher bound",
            min_value=0,
            max_value=4,
            value=DEFAULT_COMPARE_BOUND,
            help=get_help_text("bound"),
        )

    if g is None or h is None:
        return

    request = (g, h, universe_filter, int(bound))
    if st.button("Compare", type="primary"):
        try:
            verdict = compare(g, h, UniverseSpec(universe_filter, int(bound)))
        except (ResourceCeilingError, ValueError) as e:
            error_box(str(e))
            return
        st.session_state["last_verdict"] = verdict
        st.session_state["last_comparison"] = request

    verdict = st.session_state.get("last_verdict")
    if verdict is None or st.session_state.get("last_comparison") != request:
        return

    status_badge(verdict.status)
    st.markdown(f"**Method:** `{verdict.method}`")

    if verdict.proved:
        st.markdown("G >= H holds modulo the universe.")
    elif verdict.refuted and verdict.witness is not None:
        x = verdict.witness
        game_block("Witness X", print_game(x, PRINT_STYLE_NAMED))
        outcome_line("o(G + X)", misere_outcome(add(g, x)).value)
        outcome_line("o(H + X)", misere_outcome(add(h, x)).value)
    elif verdict.refuted:
        info_box("Refuted by an exact procedure; no witness lies in the searched space.")
    else:
        info_box(f"No distinguisher born by day {verdict.bound}; the comparison is undecided.")
