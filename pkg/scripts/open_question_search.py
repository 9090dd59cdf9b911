"""
Bounded searches around three unresolved questions.

- pairing: a game G such that no binary dicot X makes G + X a P-position
- impartial-top: a game G that is >= every impartial game modulo dicots
- dicot-vs-impartial: a dicot G and an impartial H equivalent modulo
  impartial games but distinguished by a dicot game

Every search is bounded, so a hit is only a candidate and an empty result
proves nothing. The script prints what it finds and asserts nothing.

Usage:
    python scripts/open_question_search.py [pairing|impartial-top|dicot-vs-impartial|all]
"""

import argparse
import logging
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), ".."))

from src.census.enumerate import enumerate_space  # noqa: E402
from src.comparison.search import first_distinguisher  # noqa: E402
from src.comparison.universe import UniverseSpec  # noqa: E402
from src.constants import (  # noqa: E402
    FILTER_ALL,
    FILTER_BINARY_DICOT,
    FILTER_DICOT,
    FILTER_IMPARTIAL,
    PRINT_STYLE_NAMED,
)
from src.games.core import add  # noqa: E402
from src.games.notation import print_game  # noqa: E402
from src.games.solver import Outcome, misere_outcome  # noqa: E402

logger = logging.getLogger("open_question_search")


def search_pairing(g_bound: int, x_bound: int) -> list[str]:
    """Games with no P-position partner among binary dicot games born by x_bound."""
    partners = enumerate_space(FILTER_BINARY_DICOT, x_bound).games
    found = []
    for g in enumerate_space(FILTER_ALL, g_bound):
        if not any(misere_outcome(add(g, x)) == Outcome.P for x in partners):
            found.append(print_game(g, PRINT_STYLE_NAMED))
    return found


def search_impartial_top(g_bound: int, x_bound: int, dist_bound: int) -> list[str]:
    """Dicot games no dicot distinguisher separates from any impartial game above."""
    universe = UniverseSpec(FILTER_DICOT, dist_bound)
    impartial = enumerate_space(FILTER_IMPARTIAL, x_bound).games
    found = []
    for g in enumerate_space(FILTER_DICOT, g_bound):
        if all(first_distinguisher(g, x, universe) is None for x in impartial):
            found.append(print_game(g, PRINT_STYLE_NAMED))
    return found


def search_dicot_vs_impartial(g_bound: int, h_bound: int, dist_bound: int) -> list[str]:
    """Pairs equivalent against impartial contexts but separated by a dicot one."""
    impartial_universe = UniverseSpec(FILTER_IMPARTIAL, dist_bound + 1)
    dicot_universe = UniverseSpec(FILTER_DICOT, dist_bound)
    found = []
    for g in enumerate_space(FILTER_DICOT, g_bound):
        for h in enumerate_space(FILTER_IMPARTIAL, h_bound):
            if first_distinguisher(g, h, impartial_universe) is not None:
                continue
            if first_distinguisher(h, g, impartial_universe) is not None:
                continue
            x = first_distinguisher(g, h, dicot_universe) or first_distinguisher(h, g, dicot_universe)
            if x is not None:
                found.append(
                    f"G={print_game(g, PRINT_STYLE_NAMED)} H={print_game(h, PRINT_STYLE_NAMED)} "
                    f"X={print_game(x, PRINT_STYLE_NAMED)}"
                )
    return found


def _report(title: str, found: list[str]) -> None:
    print(f"== {title}: {len(found)} candidate(s)")
    for line in found:
        print(f"   {line}")


def main() -> int:
    parser = argparse.ArgumentParser(description="Bounded searches for open questions.")
    parser.add_argument(
        "search",
        nargs="?",
        default="all",
        choices=["pairing", "impartial-top", "dicot-vs-impartial", "all"],
    )
    parser.add_argument("--g-bound", type=int, default=2)
    parser.add_argument("--x-bound", type=int, default=3)
    parser.add_argument("--dist-bound", type=int, default=2)
    parser.add_argument("-v", "--verbose", action="store_true")
    args = parser.parse_args()

    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)

    if args.search in ("pairing", "all"):
        _report(
            f"games born by {args.g_bound} without a binary dicot P-partner born by {args.x_bound}",
            search_pairing(args.g_bound, args.x_bound),
        )
    if args.search in ("impartial-top", "all"):
        _report(
            f"dicot games born by {args.g_bound} unrefuted above impartial games born by {args.x_bound}",
            search_impartial_top(args.g_bound, args.x_bound, args.dist_bound),
        )
    if args.search in ("dicot-vs-impartial", "all"):
        _report(
            "dicot/impartial pairs equivalent against impartial contexts, separated by dicot ones",
            search_dicot_vs_impartial(args.g_bound, args.x_bound, args.dist_bound),
        )
    return 0


if __name__ == "__main__":
    sys.exit(main())
