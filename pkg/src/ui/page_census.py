"""
Census page.

Enumerate spaces of small games and count their equivalence classes.
"""

import pandas as pd
import streamlit as st

from src.census.classify import approximate_dicot_census, census_binary_dicot
from src.census.enumerate import ResourceCeilingError, describe_size, enumerate_space, predicted_size
from src.constants import (
    DEFAULT_CENSUS_SAMPLES,
    DEFAULT_DICOT_DISTINGUISHER_BOUND,
    PRINT_STYLE_NAMED,
    UI_LIST_LIMIT,
    UNIVERSE_FILTER_LABELS,
    UNIVERSE_FILTERS,
)
from src.games.core import birthday
from src.games.notation import print_game
from src.games.solver import misere_outcome
from src.reporting.summary import census_to_dataframe
from src.ui.components import error_box, get_help_text, info_box, page_header, warning_box


def render_page_census() -> None:
    """Render the Census page."""
    page_header("Census", "Enumerate trees born by a day and count equivalence classes.")

    _render_enumeration()
    st.divider()
    _render_censuses()


def _render_enumeration() -> None:
    st.markdown("#### Enumerate")
    col1, col2 = st.columns(2)
    with col1:
        filter_name = st.selectbox(
            "Filter", UNIVERSE_FILTERS, format_func=lambda f: UNIVERSE_FILTER_LABELS[f]
        )
    with col2:
        bound = int(st.number_input("Born by day", min_value=0, max_value=6, value=2))

    st.markdown(f"**Trees:** {describe_size(filter_name, bound)}")
    if predicted_size(filter_name, bound, cap=UI_LIST_LIMIT + 1) > UI_LIST_LIMIT:
        info_box(f"Only spaces of at most {UI_LIST_LIMIT} trees are listed.")
        return

    try:
        space = enumerate_space(filter_name, bound)
    except ResourceCeilingError as e:
        error_box(str(e))
        return

    table = pd.DataFrame(
        [
            {
                "game": print_game(game, PRINT_STYLE_NAMED),
                "birthday": birthday(game),
                "outcome": misere_outcome(game).value,
            }
            for game in space
        ]
    )
    st.dataframe(table, use_container_width=True, hide_index=True)


def _render_censuses() -> None:
    st.markdown("#### Class counts")
    col1, col2 = st.columns(2)
    with col1:
        if st.button("Binary dicot games born by day 3", use_container_width=True):
            with st.spinner("Classifying..."):
                st.session_state["census_results"].append(census_binary_dicot(3))
    with col2:
        dist_bound = int(
            st.number_input(
                "Dicot distinguisher bound",
                min_value=0,
                max_value=2,
                value=DEFAULT_DICOT_DISTINGUISHER_BOUND,
                help=get_help_text("bound"),
            )
        )
        samples = int(
            st.number_input(
                "Sampled day-3 trees",
                min_value=1,
                max_value=2000,
                value=DEFAULT_CENSUS_SAMPLES,
            )
        )
        if st.button("Approximate dicot census (day 3)", use_container_width=True):
            with st.spinner("Counting outcome signatures..."):
                st.session_state["census_results"].append(
                    approximate_dicot_census(3, dist_bound, samples=samples)
                )

    results = st.session_state.get("census_results") or []
    if not results:
        return

    st.dataframe(census_to_dataframe(results), use_container_width=True, hide_index=True)
    for result in results:
        if result.flagged:
            warning_box(f"{result.name}: " + "; ".join(result.notes))
