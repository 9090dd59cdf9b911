"""
Reusable UI components for the Streamlit workbench.

Styled boxes, tooltips, badges and the game input widget shared by
every page.
"""

from typing import Any, Optional

import streamlit as st

from src.games.core import GameId
from src.games.notation import parse_game
from src.ui.theme import BRAND_SLATE, get_game_html, get_outcome_badge_html, get_status_badge_html
from src.ui.tooltips import get_tooltip, get_tooltip_text


def info_tooltip(key: str) -> None:
    """
    Display an info icon with a tooltip for a technical term.

    Args:
        key: The tooltip key from the glossary
    """
    title, explanation, example = get_tooltip(key)

    tooltip_content = explanation
    if example:
        tooltip_content += f"\n\nExample: {example}"

    st.markdown(
        f'<span title="{tooltip_content}" style="cursor: help; '
        f'color: {BRAND_SLATE}; font-size: 0.9em;">&#9432; {title}</span>',
        unsafe_allow_html=True,
    )


def get_help_text(tooltip_key: str) -> str:
    return get_tooltip_text(tooltip_key)


def page_header(title: str, description: str) -> None:
    """
    Display a consistent page header.

    Args:
        title: The page title
        description: Brief description of the page
    """
    st.markdown(f"### {title}")
    st.markdown(f"*{description}*")
    st.divider()


def error_box(message: str) -> None:
    st.error(message)


def warning_box(message: str) -> None:
    st.warning(message)


def success_box(message: str) -> None:
    st.success(message)


def info_box(message: str) -> None:
    st.info(message)


def metric_card(label: str, value: Any, delta: Optional[str] = None) -> None:
    st.metric(label=label, value=value, delta=delta)


def status_badge(status: str, text: Optional[str] = None) -> None:
    """
    Display a colored status badge.

    Args:
        status: Report or verdict status (e.g., "pass", "refuted")
        text: Optional badge text
    """
    st.markdown(get_status_badge_html(status, text), unsafe_allow_html=True)


def outcome_line(label: str, outcome: str) -> None:
    st.markdown(f"{label} {get_outcome_badge_html(outcome)}", unsafe_allow_html=True)


def game_block(label: str, text: str) -> None:
    st.markdown(get_game_html(label, text), unsafe_allow_html=True)


def game_input(label: str, key: str, default: str = "0") -> Optional[GameId]:
    """
    Text input that parses a game expression.

    Shows the parse error under the input and returns None on bad input.

    Args:
        label: Widget label
        key: Streamlit widget key
        default: Initial expression

    Returns:
        Game id, or None when the text does not parse
    """
    text = st.text_input(label, value=default, key=key, help=get_help_text("notation"))
    game, error = parse_game(text)
    if error:
        error_box(error)
    return game


def download_button_styled(
    label: str,
    data: Any,
    file_name: str,
    mime_type: str,
    help_text: Optional[str] = None,
) -> bool:
    """
    Create a styled download button.

    Args:
        label: Button label
        data: Data to download
        file_name: Name for the downloaded file
        mime_type: MIME type of the file
        help_text: Optional help text

    Returns:
        True if button was clicked
    """
    return st.download_button(
        label=label,
        data=data,
        file_name=file_name,
        mime=mime_type,
        help=help_text,
        use_container_width=True,
    )
