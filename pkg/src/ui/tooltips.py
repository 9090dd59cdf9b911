"""
Tooltip content derived from the glossary.

Plain explanations for the game-theory terms used in the workbench.
All definitions follow glossary.md.
"""

from typing import Optional

# Term key -> (title, explanation, example); example may be None
TOOLTIPS = {
    "notation": (
        "Game notation",
        "Games are written in braces with Left options before the bar and Right "
        "options after it. Integers, *, I, S, Z, Ga, B(i), s(i), conj(e), adj(e), "
        "tilde(e, i) and sums with + are also accepted.",
        "{0,*|0} or B(2) + conj(1)",
    ),
    "misere": (
        "Misère play",
        "The last player to move loses. Equivalently, a player with no move on "
        "their turn wins.",
        None,
    ),
    "outcome": (
        "Outcome",
        "Who wins with perfect play: L (Left always), R (Right always), N (whoever "
        "moves next), P (whoever moves second). L is above N and P, which are both "
        "above R; N and P are incomparable.",
        "o(0) = N in misère play.",
    ),
    "universe": (
        "Universe",
        "The games allowed as distinguishing contexts. G >= H modulo a universe "
        "means o(G + X) >= o(H + X) for every X in it.",
        None,
    ),
    "bound": (
        "Distinguisher bound",
        "Bounded searches only try contexts born by this day. A search that finds "
        "nothing answers 'unknown', never 'proved'.",
        "Dicot games born by day 2 are 10 trees.",
    ),
    "dicot": (
        "Dicot",
        "Every follower has moves for both players or for neither.",
        "* = {0|0} is dicot; 1 = {0|} is not.",
    ),
    "binary": (
        "Binary",
        "Every follower has at most one option for each player.",
        None,
    ),
    "impartial": (
        "Impartial",
        "Both players always have the same options.",
        "*2 = {0,*|0,*}",
    ),
    "adjoint": (
        "Adjoint",
        "A dicot game G^o with G + G^o a P-position.",
        "The adjoint of 0 is *.",
    ),
    "tilde": (
        "Tilde game",
        "A companion of G built like the adjoint, with B_i where the adjoint uses *. "
        "The index must be at least the birthday of G for its guarantees.",
        None,
    ),
    "birthday": (
        "Birthday",
        "The height of the game tree.",
        "0 is born on day 0, * on day 1.",
    ),
    "canonical": (
        "Canonical form",
        "The simplest game equivalent to an impartial game modulo impartial games.",
        None,
    ),
    "witness": (
        "Witness",
        "A context X showing that G >= H fails: o(G + X) is not >= o(H + X).",
        None,
    ),
    "ceiling": (
        "Enumeration ceiling",
        "The largest space a search may build. Larger requests are refused.",
        None,
    ),
}


def get_tooltip(key: str) -> tuple[str, str, Optional[str]]:
    """
    Get tooltip content for a term.

    Args:
        key: The tooltip key (e.g., "outcome", "dicot")

    Returns:
        Tuple of (title, explanation, example) where example may be None
    """
    return TOOLTIPS.get(key, (key.replace("_", " ").title(), "No description available.", None))


def get_tooltip_text(key: str) -> str:
    """Explanation and example joined for a widget's help parameter."""
    title, explanation, example = get_tooltip(key)
    if example:
        return f"{explanation} Example: {example}"
    return explanation
