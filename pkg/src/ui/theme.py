"""
Workbench theme.

Colors for statuses and outcome classes, the game-expression style and
the CSS injected into the Streamlit page.
"""

import html

# =============================================================================
# COLORS
# =============================================================================

BRAND_GREEN = "#2F855A"      # pass, proved
BRAND_SLATE = "#2D3748"      # text, headings
BRAND_GRAY_BG = "#EDF2F7"    # game blocks
BRAND_AMBER = "#D69E2E"      # unknown, bounded
BRAND_RED = "#C53030"        # fail, refuted
BRAND_BLUE = "#2B6CB0"       # Left

STATUS_COLORS = {
    "pass": BRAND_GREEN,
    "proved": BRAND_GREEN,
    "fail": BRAND_RED,
    "refuted": BRAND_RED,
    "unknown": BRAND_AMBER,
}

# Left wins in blue, Right wins in red
OUTCOME_COLORS = {
    "L": BRAND_BLUE,
    "R": BRAND_RED,
    "N": BRAND_GREEN,
    "P": BRAND_SLATE,
}

# =============================================================================
# TYPOGRAPHY
# =============================================================================

FONT_PRIMARY = "system-ui, -apple-system, 'Segoe UI', Roboto, sans-serif"
FONT_GAME = "'JetBrains Mono', 'Fira Code', Menlo, Consolas, monospace"


def get_custom_css() -> str:
    """
    Get the page CSS.

    Returns:
        CSS string to inject via st.markdown
    """
    return f"""
    <style>
        html, body, [class*="css"] {{
            font-family: {FONT_PRIMARY};
        }}

        [data-testid="stMainBlockContainer"] {{
            padding-top: 1.5rem !important;
        }}

        .mw-header {{
            color: {BRAND_SLATE} !important;
            font-size: 1.6rem !important;
            font-weight: 700 !important;
            margin: 0 !important;
        }}

        .mw-tagline {{
            color: {BRAND_SLATE} !important;
            font-size: 0.9rem !important;
            margin: 0.2rem 0 0.8rem 0 !important;
        }}

        .mw-game {{
            font-family: {FONT_GAME};
            background-color: {BRAND_GRAY_BG};
            border-left: 3px solid {BRAND_SLATE};
            padding: 0.4rem 0.75rem;
            margin: 0.25rem 0 0.5rem 0;
            overflow-x: auto;
            white-space: nowrap;
        }}

        .mw-outcome {{
            display: inline-block;
            min-width: 1.8em;
            text-align: center;
            color: white;
            font-family: {FONT_GAME};
            font-weight: 700;
            border-radius: 3px;
            padding: 1px 6px;
        }}
    </style>
    """


def get_status_badge_html(status: str, text: str = None) -> str:
    """
    Get HTML for a status badge.

    Args:
        status: A report status or verdict status
        text: Optional custom text (defaults to status)

    Returns:
        HTML string for the badge
    """
    display_text = html.escape(text or status.upper())
    bg_color = STATUS_COLORS.get(status.lower(), BRAND_SLATE)

    return (
        f'<span style="background-color: {bg_color}; color: white; '
        f'padding: 2px 10px; border-radius: 4px; font-size: 0.85em; '
        f'font-weight: 600;">{display_text}</span>'
    )


def get_outcome_badge_html(outcome: str) -> str:
    color = OUTCOME_COLORS.get(outcome, BRAND_SLATE)
    return f'<span class="mw-outcome" style="background-color: {color};">{html.escape(outcome)}</span>'


def get_game_html(label: str, text: str) -> str:
    """Get HTML for a labelled game expression in the game font."""
    return f'<div><strong>{html.escape(label)}</strong><div class="mw-game">{html.escape(text)}</div></div>'
