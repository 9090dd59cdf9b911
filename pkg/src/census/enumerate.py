"""
Bounded enumeration of game trees.

Spaces are generated level by level: trees born by day k+1 take their
option sets from the trees born by day k, constrained by a structural
filter. The order is the generation order, so a space lists the same trees
in the same positions in every session.
"""

import logging
import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Optional

from src.constants import (
    DEFAULT_SAMPLE_WIDTH,
    FILTER_ALL,
    FILTER_BINARY,
    FILTER_BINARY_DICOT,
    FILTER_DICOT,
    FILTER_IMPARTIAL,
    FILTER_IMPARTIAL_BINARY,
    MAX_ENUMERATION_SIZE,
    UNIVERSE_FILTERS,
)
from src.games.core import (
    ZERO,
    GameId,
    intern,
    is_binary,
    is_dicot,
    is_impartial,
)

logger = logging.getLogger(__name__)

# Exact sizes are computed up to this many bits
EXACT_SIZE_BITS = 2**20

# Larger sizes are not written out in decimal
DECIMAL_SIZE_BITS = 4096

# Samplers draw options uniformly from spaces no larger than this
SAMPLE_POOL_LIMIT = 1000


class ResourceCeilingError(RuntimeError):
    """Raised when a space is predicted to exceed the enumeration ceiling."""

    pass


@dataclass(frozen=True)
class EnumSpace:
    """Distinct trees born by `bound` that satisfy `filter`."""

    filter: str
    bound: int
    games: tuple[GameId, ...]

    def __len__(self) -> int:
        return len(self.games)

    def __iter__(self) -> Iterator[GameId]:
        return iter(self.games)

    @property
    def size(self) -> int:
        return len(self.games)


def _check_filter(filter_name: str) -> None:
    if filter_name not in UNIVERSE_FILTERS:
        raise ValueError(
            f"Unknown filter '{filter_name}'. Expected one of: {', '.join(UNIVERSE_FILTERS)}"
        )


def in_filter(game: GameId, filter_name: str) -> bool:
    """Check whether a game satisfies a structural filter."""
    _check_filter(filter_name)
    if filter_name == FILTER_ALL:
        return True
    if filter_name == FILTER_DICOT:
        return is_dicot(game)
    if filter_name == FILTER_BINARY:
        return is_binary(game)
    if filter_name == FILTER_IMPARTIAL:
        return is_impartial(game)
    if filter_name == FILTER_BINARY_DICOT:
        return is_binary(game) and is_dicot(game)
    return is_impartial(game) and is_binary(game)


def _exponential(filter_name: str) -> bool:
    return filter_name in (FILTER_ALL, FILTER_DICOT, FILTER_IMPARTIAL)


def _next_size(filter_name: str, n: int) -> int:
    if filter_name == FILTER_BINARY:
        return (n + 1) ** 2
    if filter_name == FILTER_BINARY_DICOT:
        return n * n + 1
    if filter_name == FILTER_IMPARTIAL_BINARY:
        return n + 1
    if filter_name == FILTER_ALL:
        return 4**n
    if filter_name == FILTER_DICOT:
        return (2**n - 1) ** 2 + 1
    return 2**n


def predicted_size(filter_name: str, bound: int, cap: Optional[int] = None) -> Optional[int]:
    """
    Number of trees born by `bound` under a filter, without generating them.

    Without a cap the size is exact, or None once it has more than
    EXACT_SIZE_BITS bits. With a cap the result is min(size, cap) and is
    never None.

    Args:
        filter_name: Universe filter name
        bound: Birthday bound
        cap: Optional saturation value for comparisons

    Returns:
        Size of the space, capped when `cap` is given
    """
    _check_filter(filter_name)
    size = 1
    for _ in range(bound):
        if cap is not None:
            # 2**size already reaches the cap
            if _exponential(filter_name) and size >= cap.bit_length():
                return cap
            size = min(_next_size(filter_name, size), cap)
            continue
        if _exponential(filter_name) and size > EXACT_SIZE_BITS:
            return None
        if not _exponential(filter_name) and size.bit_length() > EXACT_SIZE_BITS:
            return None
        size = _next_size(filter_name, size)
    return size


def describe_size(filter_name: str, bound: int) -> str:
    """
    Size of a space as text.

    Exact decimal up to DECIMAL_SIZE_BITS bits, otherwise a power-of-two
    lower bound such as "at least 2^65536".
    """
    size = predicted_size(filter_name, bound)
    if size is None:
        return f"more than 2^{EXACT_SIZE_BITS}"
    if size.bit_length() > DECIMAL_SIZE_BITS:
        return f"at least 2^{size.bit_length() - 1}"
    return str(size)


def _subsets(count: int, min_size: int = 0, max_size: Optional[int] = None):
    top = count if max_size is None else min(max_size, count)
    for size in range(min_size, top + 1):
        yield from combinations(range(count), size)


def _option_pairs(filter_name: str, count: int):
    # Yields (left positions, right positions) in generation order
    if filter_name == FILTER_ALL:
        for left in _subsets(count):
            for right in _subsets(count):
                yield left, right
    elif filter_name == FILTER_DICOT:
        yield (), ()
        for left in _subsets(count, 1):
            for right in _subsets(count, 1):
                yield left, right
    elif filter_name == FILTER_BINARY:
        for left in _subsets(count, 0, 1):
            for right in _subsets(count, 0, 1):
                yield left, right
    elif filter_name == FILTER_BINARY_DICOT:
        yield (), ()
        for left in _subsets(count, 1, 1):
            for right in _subsets(count, 1, 1):
                yield left, right
    elif filter_name == FILTER_IMPARTIAL:
        for options in _subsets(count):
            yield options, options
    else:
        for options in _subsets(count, 0, 1):
            yield options, options


_SPACES: dict[tuple[str, int], EnumSpace] = {}

_ceiling = MAX_ENUMERATION_SIZE


def set_enumeration_ceiling(ceiling: int) -> None:
    """Set the default ceiling used when a call does not pass one."""
    global _ceiling
    if ceiling <= 0:
        raise ValueError(f"Ceiling must be positive, got {ceiling}")
    _ceiling = ceiling


def enumeration_ceiling() -> int:
    return _ceiling


def enumerate_space(
    filter_name: str,
    bound: int,
    ceiling: Optional[int] = None,
) -> EnumSpace:
    """
    Materialise every tree born by `bound` that satisfies a filter.

    Args:
        filter_name: Universe filter name
        bound: Birthday bound, at least 0
        ceiling: Largest space this call may generate; defaults to the
            configured ceiling

    Returns:
        EnumSpace in generation order

    Raises:
        ResourceCeilingError: If the predicted size exceeds the ceiling
    """
    _check_filter(filter_name)
    if bound < 0:
        raise ValueError(f"Bound must be non-negative, got {bound}")

    cached = _SPACES.get((filter_name, bound))
    if cached is not None:
        return cached

    if ceiling is None:
        ceiling = _ceiling
    predicted = predicted_size(filter_name, bound, cap=ceiling + 1)
    if predicted > ceiling:
        logger.warning(
            "Refusing to enumerate %s games born by %d: more than %d trees",
            filter_name, bound, ceiling,
        )
        raise ResourceCeilingError(
            f"Enumerating {filter_name} games born by day {bound} would produce "
            f"{describe_size(filter_name, bound)} trees, above the ceiling of {ceiling}"
        )

    if bound == 0:
        space = EnumSpace(filter_name, 0, (ZERO,))
    else:
        previous = enumerate_space(filter_name, bound - 1, ceiling).games
        seen = set(previous)
        games = list(previous)
        for left, right in _option_pairs(filter_name, len(previous)):
            game = intern(
                [previous[i] for i in left],
                [previous[i] for i in right],
            )
            if game not in seen:
                seen.add(game)
                games.append(game)
        space = EnumSpace(filter_name, bound, tuple(games))
        logger.debug(
            "Enumerated %d %s games born by %d", len(games), filter_name, bound
        )

    _SPACES[(filter_name, bound)] = space
    return space


# =============================================================================
# Sampling
# =============================================================================


def _random_counts(filter_name: str, rng: random.Random, width: int) -> tuple[int, int]:
    if filter_name in (FILTER_BINARY_DICOT, FILTER_IMPARTIAL_BINARY):
        count = rng.randint(0, 1)
        return count, count
    if filter_name == FILTER_BINARY:
        return rng.randint(0, 1), rng.randint(0, 1)
    if filter_name == FILTER_IMPARTIAL:
        count = rng.randint(0, width)
        return count, count
    if filter_name == FILTER_DICOT:
        if rng.randint(0, width) == 0:
            return 0, 0
        return rng.randint(1, width), rng.randint(1, width)
    return rng.randint(0, width), rng.randint(0, width)


def _random_tree(
    filter_name: str, bound: int, rng: random.Random, width: int
) -> GameId:
    if bound == 0:
        return ZERO

    if predicted_size(filter_name, bound - 1, cap=SAMPLE_POOL_LIMIT + 1) <= SAMPLE_POOL_LIMIT:
        pool = enumerate_space(filter_name, bound - 1).games

        def draw() -> GameId:
            return rng.choice(pool)

    else:

        def draw() -> GameId:
            return _random_tree(filter_name, bound - 1, rng, width)

    left_count, right_count = _random_counts(filter_name, rng, width)
    left = [draw() for _ in range(left_count)]
    if filter_name in (FILTER_IMPARTIAL, FILTER_IMPARTIAL_BINARY):
        return intern(left, left)
    right = [draw() for _ in range(right_count)]
    return intern(left, right)


def sample_trees(
    filter_name: str,
    bound: int,
    count: int,
    seed: int,
    width: int = DEFAULT_SAMPLE_WIDTH,
) -> list[GameId]:
    """
    Draw random trees born by `bound` that satisfy a filter.

    Used where the full space is too large to enumerate. The same seed
    always yields the same list.

    Args:
        filter_name: Universe filter name
        bound: Birthday bound
        count: Number of trees to draw (duplicates possible)
        seed: Random seed
        width: Largest option set drawn per side

    Returns:
        List of game ids
    """
    _check_filter(filter_name)
    rng = random.Random(seed)
    return [_random_tree(filter_name, bound, rng, width) for _ in range(count)]
