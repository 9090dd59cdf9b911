"""
Misère canonical forms of impartial games.

Canonicalisation is bottom-up: options are canonicalised first, then the
game collapses to one of its options-of-options when that option reverses
through the whole option set. Equivalence of impartial games is equality of
canonical forms.
"""

import logging
import time
from functools import lru_cache
from typing import Sequence

from src.comparison.search import first_distinguisher, first_distinguisher_among
from src.comparison.universe import UniverseSpec
from src.census.enumerate import enumerate_space
from src.constants import FILTER_DICOT, FILTER_IMPARTIAL
from src.games.core import GameId, intern, is_impartial, left_options
from src.games.solver import misere_outcome
from src.harness.results import CheckTally, Report

logger = logging.getLogger(__name__)

I_TO_D_ANCHOR = "Theorem I=>D: impartial equivalence implies dicot equivalence"


class CanonicalFormError(RuntimeError):
    """Raised when two different candidates reverse the same option set."""

    pass


def _require_impartial(game: GameId) -> None:
    if not is_impartial(game):
        raise ValueError(f"Game {game} is not impartial")


def canonical_impartial(game: GameId) -> GameId:
    """
    Impartial misère canonical form of G.

    Args:
        game: Impartial game

    Returns:
        Id of the canonical form

    Raises:
        ValueError: If the game is not impartial
    """
    _require_impartial(game)
    return _canonical(game)


@lru_cache(maxsize=None)
def _canonical(game: GameId) -> GameId:
    options = sorted({_canonical(option) for option in left_options(game)})
    option_set = set(options)
    collected = intern(options, options)
    target = misere_outcome(collected)

    accepted: list[GameId] = []
    seen: set[GameId] = set()
    for option in options:
        for candidate in left_options(option):
            if candidate in seen:
                continue
            seen.add(candidate)
            candidate_options = set(left_options(candidate))
            if not candidate_options <= option_set:
                continue
            if not all(
                candidate in left_options(other)
                for other in option_set - candidate_options
            ):
                continue
            if misere_outcome(candidate) != target:
                continue
            accepted.append(candidate)

    if len(accepted) > 1:
        raise CanonicalFormError(
            f"Candidates {accepted} all reverse the options of game {game}"
        )
    if accepted:
        return accepted[0]
    return collected


def equivalent_impartial(g: GameId, h: GameId) -> bool:
    """
    Equivalence modulo impartial games.

    Non-equivalent impartial games are incomparable, so this settles G >= H
    for impartial pairs as well.
    """
    return canonical_impartial(g) == canonical_impartial(h)


def i_to_d_tally(
    pairs_bound: int,
    distinguisher_bound: int,
    extra_distinguishers: Sequence[GameId] = (),
) -> CheckTally:
    """
    Tally dicot distinguishers between impartially equivalent pairs.

    `extra_distinguishers` are tried after the enumerated dicot games, so
    sampled games born later can be searched too.
    """
    tally = CheckTally()
    universe = UniverseSpec(FILTER_DICOT, distinguisher_bound)
    games = enumerate_space(FILTER_IMPARTIAL, pairs_bound).games

    for g in games:
        for h in games:
            if not equivalent_impartial(g, h):
                tally.skip()
                continue
            witness = first_distinguisher(g, h, universe)
            if witness is None:
                witness = first_distinguisher_among(g, h, extra_distinguishers)
            tally.record(
                witness is None,
                g,
                expected="no dicot distinguisher",
                got="distinguisher found",
                h=h,
                x=witness,
            )

    logger.debug("i2d checked %d pairs", tally.instances)
    return tally


def verify_i_to_d(pairs_bound: int = 3, distinguisher_bound: int = 2) -> Report:
    """
    Check that impartially equivalent pairs have no dicot distinguisher.

    Args:
        pairs_bound: Birthday bound of the impartial pairs
        distinguisher_bound: Birthday bound of the dicot distinguishers

    Returns:
        Report over every ordered equivalent pair
    """
    start = time.perf_counter()
    tally = i_to_d_tally(pairs_bound, distinguisher_bound)
    elapsed = int((time.perf_counter() - start) * 1000)
    return tally.to_report(
        "i2d",
        I_TO_D_ANCHOR,
        {"pairs_bound": pairs_bound, "dist_bound": distinguisher_bound},
        elapsed,
    )
