"""
Bounded distinguisher search.

Looks for a game X in a universe, born by the universe bound, such that
o(G + X) is not >= o(H + X). Finding one refutes G >= H; finding none
proves nothing beyond the bound.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Iterable, Optional

from src.census.enumerate import enumerate_space
from src.comparison.universe import UniverseSpec, Verdict, refutes
from src.constants import (
    METHOD_BOUNDED_SEARCH,
    VERDICT_REFUTED,
    VERDICT_UNKNOWN,
)
from src.games.core import GameId

logger = logging.getLogger(__name__)

SEARCH_CHUNK_SIZE = 256


def first_distinguisher(
    g: GameId,
    h: GameId,
    universe: UniverseSpec,
    workers: int = 1,
    ceiling: Optional[int] = None,
) -> Optional[GameId]:
    """
    First X in enumeration order refuting G >= H, or None.

    With several workers, chunks are checked concurrently but the earliest
    refuting X is still the one returned.
    """
    space = enumerate_space(universe.filter, universe.bound, ceiling).games

    if workers <= 1:
        for x in space:
            if refutes(g, h, x):
                return x
        return None

    chunks = [
        space[start:start + SEARCH_CHUNK_SIZE]
        for start in range(0, len(space), SEARCH_CHUNK_SIZE)
    ]

    def scan(chunk: tuple[GameId, ...]) -> Optional[GameId]:
        return next((x for x in chunk if refutes(g, h, x)), None)

    with ThreadPoolExecutor(max_workers=workers) as pool:
        for found in pool.map(scan, chunks):
            if found is not None:
                return found
    return None


def first_distinguisher_among(
    g: GameId, h: GameId, candidates: Iterable[GameId]
) -> Optional[GameId]:
    """First X among `candidates` refuting G >= H, or None."""
    return next((x for x in candidates if refutes(g, h, x)), None)


def refute_ge_bounded(
    g: GameId,
    h: GameId,
    universe: UniverseSpec,
    workers: int = 1,
    ceiling: Optional[int] = None,
) -> Verdict:
    """
    Search the universe for a witness against G >= H.

    Args:
        g: Left-hand game
        h: Right-hand game
        universe: Filter and distinguisher bound
        workers: Threads used to scan the space
        ceiling: Enumeration ceiling

    Returns:
        Refuted verdict with the first witness, or Unknown at the bound
    """
    witness = first_distinguisher(g, h, universe, workers, ceiling)
    if witness is not None:
        logger.debug("Bounded search refuted %d >= %d with witness %d", g, h, witness)
        return Verdict(VERDICT_REFUTED, METHOD_BOUNDED_SEARCH, witness, universe.bound)
    return Verdict(VERDICT_UNKNOWN, METHOD_BOUNDED_SEARCH, None, universe.bound)
