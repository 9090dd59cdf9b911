"""
Outcome solver.

Computes who wins a game under misère or normal play, for either player
moving first, and packs the two results into an outcome class. Results are
memoized per (game, convention).
"""

from enum import Enum
from functools import lru_cache

from src.games.core import GameId, node


class Convention(str, Enum):
    MISERE = "misere"
    NORMAL = "normal"


class Mover(str, Enum):
    """Which player moves first, seen from Left."""

    FIRST = "first"
    SECOND = "second"


class Outcome(str, Enum):
    """Outcome classes, ordered componentwise on Left's two wins."""

    L = "L"
    N = "N"
    P = "P"
    R = "R"

    @property
    def left_wins_first(self) -> bool:
        return self in (Outcome.L, Outcome.N)

    @property
    def left_wins_second(self) -> bool:
        return self in (Outcome.L, Outcome.P)

    @classmethod
    def from_wins(cls, first: bool, second: bool) -> "Outcome":
        if first:
            return cls.L if second else cls.N
        return cls.P if second else cls.R

    def conjugate(self) -> "Outcome":
        return _CONJUGATE_OUTCOME[self]


_CONJUGATE_OUTCOME = {
    Outcome.L: Outcome.R,
    Outcome.N: Outcome.N,
    Outcome.P: Outcome.P,
    Outcome.R: Outcome.L,
}


def outcome_geq(a: Outcome, b: Outcome) -> bool:
    """Partial order on outcomes: L above N and P, both above R."""
    if b.left_wins_first and not a.left_wins_first:
        return False
    if b.left_wins_second and not a.left_wins_second:
        return False
    return True


@lru_cache(maxsize=None)
def _left_wins_first(game: GameId, misere: bool) -> bool:
    gn = node(game)
    if not gn.left:
        return misere
    return any(_left_wins_second(gl, misere) for gl in gn.left)


@lru_cache(maxsize=None)
def _left_wins_second(game: GameId, misere: bool) -> bool:
    gn = node(game)
    if not gn.right:
        return not misere
    return all(_left_wins_first(gr, misere) for gr in gn.right)


def left_wins(
    game: GameId,
    mover: Mover = Mover.FIRST,
    convention: Convention = Convention.MISERE,
) -> bool:
    """
    Decide whether Left wins.

    Args:
        game: Game id
        mover: FIRST when Left starts, SECOND when Right starts
        convention: Misère (the player unable to move wins) or normal

    Returns:
        True if Left has a winning strategy
    """
    misere = convention == Convention.MISERE
    if mover == Mover.FIRST:
        return _left_wins_first(game, misere)
    return _left_wins_second(game, misere)


def outcome(game: GameId, convention: Convention = Convention.MISERE) -> Outcome:
    misere = convention == Convention.MISERE
    return Outcome.from_wins(
        _left_wins_first(game, misere),
        _left_wins_second(game, misere),
    )


def misere_outcome(game: GameId) -> Outcome:
    return outcome(game, Convention.MISERE)


def normal_outcome(game: GameId) -> Outcome:
    return outcome(game, Convention.NORMAL)
