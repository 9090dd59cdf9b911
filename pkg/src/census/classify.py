"""
Equivalence classification of enumerated spaces.

A deterministic union-find partitions a space under a supplied equivalence.
Census runs built on it count classes of binary dicot games and approximate
the dicot census with bounded distinguishers.
"""

import logging
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Callable, Generic, Hashable, Optional, TypeVar

from src.census.enumerate import EnumSpace, enumerate_space, sample_trees
from src.comparison.exact import ge_binary_db
from src.constants import (
    BINARY_DICOT_3_CLASSES,
    DEFAULT_SAMPLE_SEED,
    DICOT_3_CLASSES,
    FILTER_BINARY_DICOT,
    FILTER_DICOT,
)
from src.games.core import GameId, add, birthday, followers
from src.games.solver import misere_outcome

logger = logging.getLogger(__name__)

T = TypeVar("T", bound=Hashable)

# Pairs checked for symmetry before classification
SYMMETRY_SAMPLE_SIZE = 20


class ClassificationError(ValueError):
    """Raised when the supplied relation is not an equivalence."""

    pass


class DisjointSet(Generic[T]):
    """Union-find with path compression.

    The root of a set is always its earliest-registered element, so the
    partition and its representatives do not depend on union order.
    """

    def __init__(self) -> None:
        self.parent: dict[T, T] = {}
        self.order: dict[T, int] = {}

    def make_set(self, e: T) -> None:
        if e in self.parent:
            return
        self.parent[e] = e
        self.order[e] = len(self.order)

    # find with path compression
    def find(self, e: T) -> T:
        self.make_set(e)
        root = e
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[e] != root:
            self.parent[e], e = root, self.parent[e]
        return root

    def union(self, x: T, y: T) -> None:
        x_root = self.find(x)
        y_root = self.find(y)
        if x_root == y_root:
            return
        if self.order[y_root] < self.order[x_root]:
            x_root, y_root = y_root, x_root
        self.parent[y_root] = x_root

    def groups(self) -> list[list[T]]:
        """Sets in order of their roots, members in registration order."""
        members: dict[T, list[T]] = defaultdict(list)
        for e in sorted(self.parent, key=self.order.__getitem__):
            members[self.find(e)].append(e)
        return [members[root] for root in sorted(members, key=self.order.__getitem__)]


@dataclass
class EquivalenceClass:
    representative: GameId
    members: list[GameId] = field(default_factory=list)


@dataclass
class ClassTable:
    """Partition of a space; representatives are first in enumeration order."""

    filter: str
    bound: int
    classes: list[EquivalenceClass] = field(default_factory=list)

    @property
    def class_count(self) -> int:
        return len(self.classes)

    def class_of(self, game: GameId) -> EquivalenceClass:
        for equivalence_class in self.classes:
            if game in equivalence_class.members:
                return equivalence_class
        raise KeyError(f"Game {game} is not in the classified space")


def classify(space: EnumSpace, equiv: Callable[[GameId, GameId], bool]) -> ClassTable:
    """
    Partition a space under an equivalence.

    Each game is compared against the representative of every class found
    so far; transitivity makes one comparison per class sufficient.

    Args:
        space: Enumerated space
        equiv: Equivalence relation on game ids

    Returns:
        ClassTable with deterministic representatives

    Raises:
        ClassificationError: If equiv is not reflexive on the space or not
            symmetric on sampled pairs
    """
    games = space.games
    for game in games:
        if not equiv(game, game):
            raise ClassificationError(f"Relation is not reflexive on game {game}")

    sample = games[:SYMMETRY_SAMPLE_SIZE]
    for g in sample:
        for h in sample:
            if equiv(g, h) != equiv(h, g):
                raise ClassificationError(
                    f"Relation is not symmetric on games {g} and {h}"
                )

    partition: DisjointSet[GameId] = DisjointSet()
    representatives: list[GameId] = []
    for game in games:
        partition.make_set(game)
        for representative in representatives:
            if equiv(representative, game):
                partition.union(representative, game)
                break
        else:
            representatives.append(game)

    classes = [EquivalenceClass(group[0], group) for group in partition.groups()]
    logger.debug(
        "Classified %d %s games born by %d into %d classes",
        len(games), space.filter, space.bound, len(classes),
    )
    return ClassTable(space.filter, space.bound, classes)


# =============================================================================
# Census runs
# =============================================================================


@dataclass
class CensusResult:
    """Outcome of a census run, with any discrepancy flagged rather than raised."""

    name: str
    trees: int
    classes: int
    minimal_members: int
    expected_classes: Optional[int] = None
    flagged: bool = False
    notes: list[str] = field(default_factory=list)


def _size_key(game: GameId) -> tuple[int, int]:
    return birthday(game), len(followers(game))


def count_minimal_members(table: ClassTable) -> int:
    """Classes whose (birthday, follower count) minimum is attained once."""
    count = 0
    for equivalence_class in table.classes:
        keys = [_size_key(member) for member in equivalence_class.members]
        if keys.count(min(keys)) == 1:
            count += 1
    return count


def census_binary_dicot(bound: int = 3) -> CensusResult:
    """
    Classes of binary dicot trees born by `bound` modulo binary dicot games.

    Args:
        bound: Birthday bound (the known count at 3 is 26 trees in 13 classes)

    Returns:
        CensusResult
    """
    space = enumerate_space(FILTER_BINARY_DICOT, bound)
    table = classify(space, lambda g, h: ge_binary_db(g, h) and ge_binary_db(h, g))
    minimal = count_minimal_members(table)

    result = CensusResult(
        name=f"binary-dicot-{bound}",
        trees=space.size,
        classes=table.class_count,
        minimal_members=minimal,
        expected_classes=BINARY_DICOT_3_CLASSES if bound == 3 else None,
    )
    if minimal != table.class_count:
        result.flagged = True
        result.notes.append(
            f"{table.class_count} classes but {minimal} classes with a unique smallest member"
        )
    if result.expected_classes is not None and result.classes != result.expected_classes:
        result.flagged = True
        result.notes.append(
            f"Expected {result.expected_classes} classes, found {result.classes}"
        )
    if result.flagged:
        logger.warning("Census %s flagged: %s", result.name, "; ".join(result.notes))
    return result


def approximate_dicot_census(
    tree_bound: int = 3,
    dist_bound: int = 2,
    ceiling: Optional[int] = None,
    samples: Optional[int] = None,
    seed: int = DEFAULT_SAMPLE_SEED,
) -> CensusResult:
    """
    Count outcome signatures of dicot trees against bounded distinguishers.

    Two trees share a signature when every dicot distinguisher born by
    `dist_bound` gives their sums the same outcome. Equivalent trees always
    share a signature, so the count is a lower bound on the class count and
    grows with `dist_bound`. With `samples`, only a seeded sample of the
    trees born by `tree_bound` is classified, which lowers the bound further.

    Args:
        tree_bound: Birthday bound of the classified trees
        dist_bound: Birthday bound of the distinguishers
        ceiling: Enumeration ceiling for both spaces
        samples: Classify this many sampled trees instead of the full space
        seed: Sampling seed

    Returns:
        CensusResult with classes = number of distinct signatures

    Raises:
        ResourceCeilingError: If a space to enumerate exceeds the ceiling
    """
    distinguishers = enumerate_space(FILTER_DICOT, dist_bound, ceiling).games
    if samples is None:
        trees = enumerate_space(FILTER_DICOT, tree_bound, ceiling).games
        name = f"dicot-{tree_bound}-approx-{dist_bound}"
    else:
        trees = tuple(dict.fromkeys(sample_trees(FILTER_DICOT, tree_bound, samples, seed)))
        name = f"dicot-{tree_bound}-sample-{samples}-approx-{dist_bound}"

    signatures = {
        tuple(misere_outcome(add(game, x)) for x in distinguishers)
        for game in trees
    }
    notes = [
        f"Signatures against {len(distinguishers)} dicot distinguishers; "
        "a lower bound on the number of classes"
    ]
    if samples is not None:
        notes.append(f"{len(trees)} distinct trees from {samples} samples with seed {seed}")
    if tree_bound == 3:
        notes.append(f"The full census has {DICOT_3_CLASSES} classes")
    return CensusResult(
        name=name,
        trees=len(trees),
        classes=len(signatures),
        minimal_members=0,
        notes=notes,
    )
