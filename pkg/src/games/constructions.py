"""
Named games and game-building schemes.

Provides the fixed games I, S, Z and Ga, the families B(i), s(i) and the
integers, the adjoint and tilde constructions, and the companions that
force a chosen misère outcome when added to a game.
"""

from functools import lru_cache
from typing import NamedTuple

from src.games.core import (
    STAR,
    ZERO,
    GameId,
    birthday,
    conjugate,
    intern,
    node,
)


class InvalidIndexError(ValueError):
    """Raised for a negative family index or an index below a birthday."""

    pass


class Companions(NamedTuple):
    """Games whose sum with G has outcome P, N, L and R respectively."""

    for_p: GameId
    for_n: GameId
    for_l: GameId
    for_r: GameId


class BiCompanions(NamedTuple):
    """B_i, its conjugate and {conj(B_i) | B_i}: outcomes R, L and N with G."""

    for_r: GameId
    for_l: GameId
    for_n: GameId


def _check_index(i: int) -> None:
    if i < 0:
        raise InvalidIndexError(f"Index must be non-negative, got {i}")


# =============================================================================
# Families
# =============================================================================


@lru_cache(maxsize=None)
def integer(n: int) -> GameId:
    """The integer n = {n-1 | }, with 0 the empty game."""
    _check_index(n)
    game = ZERO
    for _ in range(n):
        game = intern([game], [])
    return game


@lru_cache(maxsize=None)
def b_game(i: int) -> GameId:
    """B_0 = {0|*} and B_{i+1} = {{{0|B_i}|{0|B_i}}|{0|B_i}}."""
    _check_index(i)
    game = intern([ZERO], [STAR])
    for _ in range(i):
        inner = intern([ZERO], [game])
        game = intern([intern([inner], [inner])], [inner])
    return game


@lru_cache(maxsize=None)
def s_game(i: int) -> GameId:
    """s_0 = 0 and s_{i+1} = {s_i | s_i}."""
    _check_index(i)
    game = ZERO
    for _ in range(i):
        game = intern([game], [game])
    return game


GAME_GA = intern([ZERO], [STAR])
GAME_I = intern([STAR], [intern([STAR], [ZERO])])
GAME_S = intern([ZERO, STAR], [intern([ZERO, STAR], [ZERO, STAR])])
GAME_Z = intern([GAME_I], [STAR])

NAMED_GAMES: dict[str, GameId] = {
    "0": ZERO,
    "*": STAR,
    "I": GAME_I,
    "S": GAME_S,
    "Z": GAME_Z,
    "Ga": GAME_GA,
}


def named(name: str) -> GameId:
    """
    Resolve a fixed name or a family member written as B(i) or s(i).

    Args:
        name: One of 0, *, I, S, Z, Ga, B(i), s(i) or a decimal integer

    Returns:
        Game id

    Raises:
        KeyError: If the name is unknown
    """
    if name in NAMED_GAMES:
        return NAMED_GAMES[name]
    if name.isdigit():
        return integer(int(name))
    for prefix, builder in (("B(", b_game), ("s(", s_game)):
        if name.startswith(prefix) and name.endswith(")"):
            index = name[len(prefix):-1]
            if index.isdigit():
                return builder(int(index))
    raise KeyError(f"Unknown game name: {name}")


# =============================================================================
# Adjoint and tilde
# =============================================================================


@lru_cache(maxsize=None)
def adjoint(game: GameId) -> GameId:
    """
    The adjoint G^o, a dicot game with G + G^o a misère P-position.

    Args:
        game: Game id

    Returns:
        Id of the adjoint
    """
    if game == ZERO:
        return STAR
    gn = node(game)
    left = [adjoint(gr) for gr in gn.right] or [ZERO]
    right = [adjoint(gl) for gl in gn.left] or [ZERO]
    return intern(left, right)


def tilde(game: GameId, i: int) -> GameId:
    """
    The tilde construction of G at level i.

    Like the adjoint, but ends are closed with B_i instead of *, so that the
    result stays binary dicot when G is binary.

    Args:
        game: Game id
        i: Level, at least 0 (the characterisations use i >= birthday)

    Returns:
        Id of the constructed game
    """
    _check_index(i)
    return _tilde(game, i)


@lru_cache(maxsize=None)
def _tilde(game: GameId, i: int) -> GameId:
    gn = node(game)
    left = [_tilde(gr, i) for gr in gn.right] or [b_game(i)]
    right = [_tilde(gl, i) for gl in gn.left] or [ZERO]
    return intern(left, right)


# =============================================================================
# Companions
# =============================================================================


def companions(game: GameId) -> Companions:
    """Outcome-forcing partners built from adjoints of G and its options."""
    gn = node(game)
    g_adj = adjoint(game)
    left_adj = [adjoint(gl) for gl in gn.left] or [ZERO]
    right_adj = [adjoint(gr) for gr in gn.right] or [ZERO]
    return Companions(
        for_p=g_adj,
        for_n=intern([g_adj], [g_adj]),
        for_l=intern([g_adj] + right_adj, left_adj),
        for_r=intern(right_adj, [g_adj] + left_adj),
    )


def bi_companions(game: GameId, i: int) -> BiCompanions:
    """B_i based partners; require i >= birthday(G)."""
    _check_index(i)
    if i < birthday(game):
        raise InvalidIndexError(
            f"Index {i} is below the birthday {birthday(game)} of the game"
        )
    b_i = b_game(i)
    b_i_conj = conjugate(b_i)
    return BiCompanions(
        for_r=b_i,
        for_l=b_i_conj,
        for_n=intern([b_i_conj], [b_i]),
    )
