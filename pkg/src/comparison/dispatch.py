"""
Comparison dispatch.

Routes G >= H modulo a universe to the strongest exact procedure that
applies, and falls back to bounded search otherwise. When an exact
procedure refutes, a distinguishing game in the universe is attached.
"""

import logging
from typing import Callable, Optional

from src.comparison.exact import (
    ge_binary_db,
    ge_db_zero,
    ge_dicot_vs_binary_db,
    has_l_follower,
    refutation_witness_db,
    zero_certificate,
)
from src.comparison.search import first_distinguisher, refute_ge_bounded
from src.comparison.universe import UniverseSpec, Verdict, refutes
from src.constants import (
    FILTER_BINARY_DICOT,
    FILTER_DICOT,
    FILTER_IMPARTIAL,
    METHOD_BINARY_RECURSION,
    METHOD_CARAC_TILDE,
    METHOD_CARAC_ZERO,
    METHOD_IMPARTIAL_CANONICAL,
    VERDICT_PROVED,
    VERDICT_REFUTED,
)
from src.games.constructions import adjoint
from src.games.core import ZERO, GameId, is_binary, is_dicot, is_impartial
from src.impartial.canonical import equivalent_impartial

logger = logging.getLogger(__name__)

# Universes in which the dicot characterisations are exact
DICOT_EXACT_FILTERS = {FILTER_DICOT, FILTER_BINARY_DICOT}

# Universes in which impartial equivalence decides the comparison
IMPARTIAL_EXACT_FILTERS = {FILTER_IMPARTIAL, FILTER_DICOT}


def _refutation(
    g: GameId,
    h: GameId,
    universe: UniverseSpec,
    method: str,
    certificates: list[Callable[[], GameId]],
) -> Verdict:
    """Refuted verdict with the first valid distinguisher found."""
    candidates: list[Callable[[], GameId]] = [
        lambda: adjoint(g),
        lambda: adjoint(h),
        *certificates,
    ]
    for build in candidates:
        x = build()
        if universe.contains(x) and refutes(g, h, x):
            return Verdict(VERDICT_REFUTED, method, x)

    found = first_distinguisher(g, h, universe)
    if found is None:
        logger.info("No witness in %s for an exact refutation by %s", universe.filter, method)
        return Verdict(VERDICT_REFUTED, method, None)
    return Verdict(VERDICT_REFUTED, method, found, universe.bound)


def exact_route(g: GameId, h: GameId, universe: UniverseSpec) -> Optional[str]:
    """Method tag of the exact procedure that applies, if any."""
    if universe.filter in DICOT_EXACT_FILTERS:
        if h == ZERO:
            return METHOD_CARAC_ZERO
        if is_binary(g) and is_binary(h):
            return METHOD_BINARY_RECURSION
        if is_dicot(g) and is_binary(h) and not has_l_follower(h):
            return METHOD_CARAC_TILDE
    if universe.filter in IMPARTIAL_EXACT_FILTERS and is_impartial(g) and is_impartial(h):
        return METHOD_IMPARTIAL_CANONICAL
    return None


def compare(g: GameId, h: GameId, universe: UniverseSpec) -> Verdict:
    """
    Compare G >= H modulo a universe.

    Args:
        g: Left-hand game
        h: Right-hand game
        universe: Filter and distinguisher bound

    Returns:
        Verdict whose method records the route taken
    """
    route = exact_route(g, h, universe)
    logger.debug("compare(%d, %d) in %s via %s", g, h, universe.filter, route)

    if route == METHOD_CARAC_ZERO:
        if ge_db_zero(g):
            return Verdict(VERDICT_PROVED, route)
        return _refutation(g, h, universe, route, [lambda: zero_certificate(g)])

    if route == METHOD_BINARY_RECURSION:
        if ge_binary_db(g, h):
            return Verdict(VERDICT_PROVED, route)
        return _refutation(g, h, universe, route, [lambda: refutation_witness_db(g, h)])

    if route == METHOD_CARAC_TILDE:
        verdict = ge_dicot_vs_binary_db(g, h)
        if verdict.proved:
            return verdict
        certificate = verdict.witness
        return _refutation(g, h, universe, route, [lambda: certificate])

    if route == METHOD_IMPARTIAL_CANONICAL:
        if equivalent_impartial(g, h):
            return Verdict(VERDICT_PROVED, route)
        return _refutation(g, h, universe, route, [])

    return refute_ge_bounded(g, h, universe)
