"""
Interned game trees.

Every game is a pair of option sets. Nodes are stored once, with sorted and
deduplicated option tuples, so two games are recursively equal exactly when
their ids are equal. All derived quantities are memoized by id.
"""

import logging
import threading
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

logger = logging.getLogger(__name__)

GameId = int


class UnknownGameError(ValueError):
    """Raised when an option refers to an id that was never interned."""

    pass


@dataclass(frozen=True)
class GameNode:
    """A game node: sorted, deduplicated Left and Right option ids."""

    left: tuple[GameId, ...]
    right: tuple[GameId, ...]


class Interner:
    """Hash-consing store for game nodes.

    Lookups are lock-free; insertion takes a lock so concurrent interning of
    the same node from several threads yields one id.
    """

    def __init__(self) -> None:
        self._nodes: list[GameNode] = []
        self._ids: dict[GameNode, GameId] = {}
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self._nodes)

    def intern(self, left: Iterable[GameId], right: Iterable[GameId]) -> GameId:
        node = GameNode(tuple(sorted(set(left))), tuple(sorted(set(right))))
        existing = self._ids.get(node)
        if existing is not None:
            return existing

        size = len(self._nodes)
        for option in node.left + node.right:
            if not 0 <= option < size:
                raise UnknownGameError(f"Option id {option} is not interned")

        with self._lock:
            existing = self._ids.get(node)
            if existing is None:
                existing = len(self._nodes)
                self._nodes.append(node)
                self._ids[node] = existing
        return existing

    def node(self, game: GameId) -> GameNode:
        if not 0 <= game < len(self._nodes):
            raise UnknownGameError(f"Game id {game} is not interned")
        return self._nodes[game]


_INTERNER = Interner()


def intern(left: Iterable[GameId], right: Iterable[GameId]) -> GameId:
    """
    Return the unique id of the game {left | right}.

    Args:
        left: Ids of Left options (order and duplicates are irrelevant)
        right: Ids of Right options

    Returns:
        Canonical id of the node
    """
    return _INTERNER.intern(left, right)


def node(game: GameId) -> GameNode:
    return _INTERNER.node(game)


def interned_count() -> int:
    """Number of distinct nodes interned so far in this process."""
    return len(_INTERNER)


def left_options(game: GameId) -> tuple[GameId, ...]:
    return _INTERNER.node(game).left


def right_options(game: GameId) -> tuple[GameId, ...]:
    return _INTERNER.node(game).right


ZERO = intern((), ())
STAR = intern((ZERO,), (ZERO,))


# =============================================================================
# Arithmetic
# =============================================================================


def add(g: GameId, h: GameId) -> GameId:
    """
    Disjunctive sum G + H.

    Args:
        g: First summand
        h: Second summand

    Returns:
        Id of the sum
    """
    if g > h:
        g, h = h, g
    return _add(g, h)


@lru_cache(maxsize=None)
def _add(g: GameId, h: GameId) -> GameId:
    if g == ZERO:
        return h
    gn = node(g)
    hn = node(h)
    left = [add(gl, h) for gl in gn.left] + [add(g, hl) for hl in hn.left]
    right = [add(gr, h) for gr in gn.right] + [add(g, hr) for hr in hn.right]
    return intern(left, right)


def sum_all(games: Iterable[GameId]) -> GameId:
    """Sum of any number of games; the empty sum is 0."""
    total = ZERO
    for game in games:
        total = add(total, game)
    return total


@lru_cache(maxsize=None)
def conjugate(game: GameId) -> GameId:
    """Swap the roles of Left and Right recursively."""
    gn = node(game)
    return intern(
        [conjugate(gr) for gr in gn.right],
        [conjugate(gl) for gl in gn.left],
    )


# =============================================================================
# Structure
# =============================================================================


@lru_cache(maxsize=None)
def birthday(game: GameId) -> int:
    gn = node(game)
    options = gn.left + gn.right
    if not options:
        return 0
    return 1 + max(birthday(option) for option in options)


@lru_cache(maxsize=None)
def followers(game: GameId) -> frozenset[GameId]:
    """All games reachable by zero or more moves, the game itself included."""
    gn = node(game)
    reached = {game}
    for option in gn.left + gn.right:
        reached |= followers(option)
    return frozenset(reached)


def is_left_end(game: GameId) -> bool:
    return not node(game).left


def is_right_end(game: GameId) -> bool:
    return not node(game).right


@lru_cache(maxsize=None)
def is_dicot(game: GameId) -> bool:
    """Both option sets empty, or both non-empty, at every follower."""
    gn = node(game)
    if not gn.left and not gn.right:
        return True
    if not gn.left or not gn.right:
        return False
    return all(is_dicot(option) for option in gn.left + gn.right)


@lru_cache(maxsize=None)
def is_binary(game: GameId) -> bool:
    """At most one option per player at every follower."""
    gn = node(game)
    if len(gn.left) > 1 or len(gn.right) > 1:
        return False
    return all(is_binary(option) for option in gn.left + gn.right)


@lru_cache(maxsize=None)
def is_impartial(game: GameId) -> bool:
    gn = node(game)
    if gn.left != gn.right:
        return False
    return all(is_impartial(option) for option in gn.left)
