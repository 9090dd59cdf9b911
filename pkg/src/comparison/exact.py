"""
Exact comparison procedures.

Decides G >= H modulo binary dicot games (and hence modulo dicot games) for
the shapes where a single solver call or a finite recursion settles it:

- G against 0, through the sum G + {B_i | 0};
- binary G against binary H, through a four-condition recursion;
- dicot G against binary H with no L-outcome follower, through G + tilde(H, i).

For binary pairs that compare false, a binary dicot distinguisher is built
constructively from the condition that fails.
"""

import logging
from functools import lru_cache

from src.comparison.search import first_distinguisher
from src.comparison.universe import (
    PreconditionError,
    UniverseSpec,
    Verdict,
    WitnessNotFoundError,
)
from src.constants import (
    FILTER_BINARY_DICOT,
    METHOD_CARAC_TILDE,
    VERDICT_PROVED,
    VERDICT_REFUTED,
    WITNESS_SEARCH_BOUND,
)
from src.games.constructions import adjoint, b_game, tilde
from src.games.core import (
    ZERO,
    GameId,
    add,
    birthday,
    conjugate,
    followers,
    intern,
    is_binary,
    is_dicot,
    left_options,
    node,
    right_options,
)
from src.games.solver import (
    Convention,
    Mover,
    Outcome,
    left_wins,
    misere_outcome,
    outcome_geq,
)

logger = logging.getLogger(__name__)


def _require_binary(g: GameId, h: GameId) -> None:
    if not is_binary(g):
        raise PreconditionError("binary-g", "G must be a binary game")
    if not is_binary(h):
        raise PreconditionError("binary-h", "H must be a binary game")


# =============================================================================
# G against 0
# =============================================================================


def zero_certificate(game: GameId) -> GameId:
    """The game {B_i | 0} with i = birthday(G)."""
    return intern([b_game(birthday(game))], [ZERO])


def ge_db_zero(game: GameId) -> bool:
    """
    Decide G >= 0 modulo binary dicot games (equivalently, dicot games).

    Args:
        game: Any game

    Returns:
        True iff Left wins G + {B_i | 0} with Right moving first
    """
    return left_wins(add(game, zero_certificate(game)), Mover.SECOND)


# =============================================================================
# Binary recursion
# =============================================================================


def ge_binary_db(g: GameId, h: GameId) -> bool:
    """
    Decide G >= H modulo binary dicot games for binary G and H.

    Args:
        g: Binary game
        h: Binary game

    Returns:
        True iff all four conditions of the recursion hold

    Raises:
        PreconditionError: If either game is not binary
    """
    _require_binary(g, h)
    return _ge_binary(g, h)


def _condition_failures(g: GameId, h: GameId) -> tuple[bool, bool, bool, bool]:
    # True marks a failing condition, in order 1 to 4
    gn = node(g)
    hn = node(h)
    first = not gn.right and misere_outcome(h).left_wins_second
    third = not hn.left and not misere_outcome(g).left_wins_first
    second = any(
        not (
            any(_ge_binary(gr, hr) for hr in hn.right)
            or any(_ge_binary(grl, h) for grl in left_options(gr))
        )
        for gr in gn.right
    )
    fourth = any(
        not (
            any(_ge_binary(gl, hl) for gl in gn.left)
            or any(_ge_binary(g, hlr) for hlr in right_options(hl))
        )
        for hl in hn.left
    )
    return first, second, third, fourth


@lru_cache(maxsize=None)
def _ge_binary(g: GameId, h: GameId) -> bool:
    return not any(_condition_failures(g, h))


def downlinked_db(g: GameId, h: GameId) -> bool:
    """
    True iff no G^L >= H and no H^R <= G, modulo binary dicot games.

    Args:
        g: Binary game
        h: Binary game

    Returns:
        Whether G is downlinked to H
    """
    _require_binary(g, h)
    if any(_ge_binary(gl, h) for gl in left_options(g)):
        return False
    return not any(_ge_binary(g, hr) for hr in right_options(h))


# =============================================================================
# Constructive witnesses
# =============================================================================


def _left_first_wins(game: GameId) -> bool:
    return misere_outcome(game).left_wins_first


def _right_first_wins(game: GameId) -> bool:
    return not misere_outcome(game).left_wins_second


def refutation_witness_db(g: GameId, h: GameId) -> GameId:
    """
    A binary dicot X with o(G + X) not >= o(H + X), for binary G not >= H.

    Conditions 1 and 3 fail on outcomes of G and H themselves, so 0
    distinguishes. A failing condition 2 or 4 yields a downlink witness for
    (G^R, H) or (G, H^L).

    Raises:
        PreconditionError: If G >= H holds
    """
    _require_binary(g, h)
    first, second, third, fourth = _condition_failures(g, h)
    if first or third:
        return ZERO

    gn = node(g)
    hn = node(h)
    if second:
        for gr in gn.right:
            if not (
                any(_ge_binary(gr, hr) for hr in hn.right)
                or any(_ge_binary(grl, h) for grl in left_options(gr))
            ):
                return build_downlink_witness(gr, h)
    if fourth:
        for hl in hn.left:
            if not (
                any(_ge_binary(gl, hl) for gl in gn.left)
                or any(_ge_binary(g, hlr) for hlr in right_options(hl))
            ):
                return build_downlink_witness(g, hl)

    raise PreconditionError("not-refuted", "G >= H holds; there is nothing to refute")


def _distinguisher(g: GameId, h: GameId) -> GameId:
    found = first_distinguisher(
        g, h, UniverseSpec(FILTER_BINARY_DICOT, WITNESS_SEARCH_BOUND)
    )
    if found is not None:
        return found
    return refutation_witness_db(g, h)


def left_first_witness(g: GameId, h: GameId) -> GameId:
    """
    For binary G not >= H, a binary dicot X with o(G + X) <= P and
    o(H + X) >= N.
    """
    w = _distinguisher(g, h)
    if _left_first_wins(add(h, w)) and not _left_first_wins(add(g, w)):
        return w
    # w separates G and H with Right moving first
    gl = left_options(g)
    return intern([w], [adjoint(gl[0])] if gl else [ZERO])


def right_first_witness(g: GameId, h: GameId) -> GameId:
    """
    For binary G not >= H, a binary dicot X with o(G + X) <= N and
    o(H + X) >= P.
    """
    w = _distinguisher(g, h)
    if _right_first_wins(add(g, w)) and not _right_first_wins(add(h, w)):
        return w
    # w separates G and H with Left moving first
    hr = right_options(h)
    return intern([adjoint(hr[0])] if hr else [ZERO], [w])


def build_downlink_witness(g: GameId, h: GameId) -> GameId:
    """
    A binary dicot T with o(G + T) <= P <= o(H + T).

    Args:
        g: Binary game
        h: Binary game downlinked from G

    Returns:
        Id of T

    Raises:
        PreconditionError: If G is not downlinked to H
        WitnessNotFoundError: If the built T fails its outcome check
    """
    if not downlinked_db(g, h):
        raise PreconditionError("downlinked", "G is not downlinked to H")

    gn = node(g)
    hn = node(h)

    # Left option of T
    if not gn.right and not hn.right:
        t_left = ZERO
    elif not hn.right:
        t_left = adjoint(gn.right[0])
    else:
        t_left = right_first_witness(g, hn.right[0])

    # Right option of T
    if not gn.left and not hn.left:
        t_right = ZERO
    elif not gn.left:
        t_right = adjoint(hn.left[0])
    else:
        t_right = left_first_witness(gn.left[0], h)

    witness = intern([t_left], [t_right])
    if not (
        outcome_geq(Outcome.P, misere_outcome(add(g, witness)))
        and outcome_geq(misere_outcome(add(h, witness)), Outcome.P)
    ):
        raise WitnessNotFoundError(
            f"Constructed game {witness} does not separate {g} and {h}"
        )
    logger.debug("Downlink witness for (%d, %d): %d", g, h, witness)
    return witness


# =============================================================================
# Dicot against binary
# =============================================================================


def has_l_follower(game: GameId) -> bool:
    return any(misere_outcome(f) == Outcome.L for f in followers(game))


def ge_dicot_vs_binary_db(g: GameId, h: GameId) -> Verdict:
    """
    Decide G >= H modulo dicot games for dicot G and a binary H whose
    followers never have outcome L.

    Args:
        g: Dicot game
        h: Binary game with no L-outcome follower

    Returns:
        Proved, or Refuted with witness tilde(H, i)

    Raises:
        PreconditionError: Naming the hypothesis that fails
    """
    if not is_dicot(g):
        raise PreconditionError("dicot-g", "G must be a dicot game")
    if not is_binary(h):
        raise PreconditionError("binary-h", "H must be a binary game")
    if has_l_follower(h):
        raise PreconditionError("l-follower", "H has a follower with outcome L")

    i = max(birthday(g), birthday(h))
    certificate = tilde(h, i)
    if left_wins(add(g, certificate), Mover.SECOND):
        return Verdict(VERDICT_PROVED, METHOD_CARAC_TILDE)
    return Verdict(VERDICT_REFUTED, METHOD_CARAC_TILDE, certificate)


# =============================================================================
# Normal play
# =============================================================================


def ge_normal(g: GameId, h: GameId) -> bool:
    """G >= H in normal play: Left wins G - H moving second."""
    return left_wins(add(g, conjugate(h)), Mover.SECOND, Convention.NORMAL)
