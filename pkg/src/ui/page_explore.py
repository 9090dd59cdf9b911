"""
Explore page.

Parse a game and show its structure, outcomes and constructions.
"""

import pandas as pd
import streamlit as st

from src.constants import PRINT_STYLE_NAMED
from src.games.constructions import adjoint, companions, tilde
from src.games.core import (
    GameId,
    add,
    birthday,
    followers,
    is_binary,
    is_dicot,
    is_impartial,
)
from src.games.notation import print_game
from src.games.solver import misere_outcome, normal_outcome
from src.impartial.canonical import canonical_impartial
from src.ui.components import (
    game_block,
    game_input,
    get_help_text,
    info_tooltip,
    metric_card,
    outcome_line,
    page_header,
)


def render_page_explore() -> None:
    """Render the Explore page."""
    page_header("Explore", "Parse a game and inspect its outcome and constructions.")

    game = game_input("Game", key="explore_game", default=st.session_state.get("last_game_text", "0"))
    if game is None:
        return
    st.session_state["last_game_text"] = st.session_state.get("explore_game", "0")
    st.session_state["last_game"] = game

    game_block("Braces", print_game(game))
    game_block("Named", print_game(game, PRINT_STYLE_NAMED))

    col1, col2, col3, col4 = st.columns(4)
    with col1:
        outcome_line("Misère outcome", misere_outcome(game).value)
    with col2:
        outcome_line("Normal outcome", normal_outcome(game).value)
    with col3:
        metric_card("Birthday", birthday(game))
    with col4:
        metric_card("Followers", len(followers(game)))

    info_tooltip("outcome")
    st.markdown(
        f"Dicot: **{_yes_no(is_dicot(game))}** &middot; "
        f"Binary: **{_yes_no(is_binary(game))}** &middot; "
        f"Impartial: **{_yes_no(is_impartial(game))}**"
    )

    st.divider()
    _render_constructions(game)


def _yes_no(flag: bool) -> str:
    return "yes" if flag else "no"


def _render_constructions(game: GameId) -> None:
    st.markdown("#### Constructions")

    index = st.number_input(
        "Tilde index",
        min_value=0,
        max_value=12,
        value=min(birthday(game), 12),
        help=get_help_text("tilde"),
    )

    rows = [("adjoint", adjoint(game)), (f"tilde(G, {index})", tilde(game, int(index)))]
    partners = companions(game)
    rows += [
        ("companion for P", partners.for_p),
        ("companion for N", partners.for_n),
        ("companion for L", partners.for_l),
        ("companion for R", partners.for_r),
    ]
    if is_impartial(game):
        rows.append(("canonical form", canonical_impartial(game)))

    table = pd.DataFrame(
        [
            {
                "construction": name,
                "game": print_game(result, PRINT_STYLE_NAMED),
                "o(X)": misere_outcome(result).value,
                "o(G + X)": misere_outcome(add(game, result)).value,
            }
            for name, result in rows
        ]
    )
    st.dataframe(table, use_container_width=True, hide_index=True)
