"""
Universes and comparison verdicts.

A universe is a structural filter together with a birthday bound for the
distinguishers a bounded search may use. A verdict records what a
comparison established and how.
"""

from dataclasses import dataclass
from typing import Any, Optional

from src.census.enumerate import in_filter
from src.constants import (
    DEFAULT_COMPARE_BOUND,
    UNIVERSE_FILTERS,
    VERDICT_PROVED,
    VERDICT_REFUTED,
    VERDICT_UNKNOWN,
)
from src.games.core import GameId, add
from src.games.notation import print_game
from src.games.solver import misere_outcome, outcome_geq


class PreconditionError(ValueError):
    """Raised when an exact procedure is called outside its hypotheses."""

    def __init__(self, hypothesis: str, message: str) -> None:
        super().__init__(f"[{hypothesis}] {message}")
        self.hypothesis = hypothesis


class WitnessNotFoundError(RuntimeError):
    """Raised when a constructed witness fails its outcome check."""

    pass


@dataclass(frozen=True)
class UniverseSpec:
    """A universe filter plus the birthday bound for bounded searches."""

    filter: str
    bound: int = DEFAULT_COMPARE_BOUND

    def __post_init__(self) -> None:
        if self.filter not in UNIVERSE_FILTERS:
            raise ValueError(
                f"Unknown universe '{self.filter}'. Expected one of: {', '.join(UNIVERSE_FILTERS)}"
            )
        if self.bound < 0:
            raise ValueError(f"Bound must be non-negative, got {self.bound}")

    def contains(self, game: GameId) -> bool:
        return in_filter(game, self.filter)


@dataclass(frozen=True)
class Verdict:
    """Result of comparing G >= H modulo a universe."""

    status: str
    method: str
    witness: Optional[GameId] = None
    bound: Optional[int] = None

    @property
    def proved(self) -> bool:
        return self.status == VERDICT_PROVED

    @property
    def refuted(self) -> bool:
        return self.status == VERDICT_REFUTED

    @property
    def unknown(self) -> bool:
        return self.status == VERDICT_UNKNOWN


def verdict_to_dict(verdict: Verdict) -> dict[str, Any]:
    return {
        "status": verdict.status,
        "method": verdict.method,
        "witness": print_game(verdict.witness) if verdict.witness is not None else None,
        "bound": verdict.bound,
    }


def refutes(g: GameId, h: GameId, x: GameId) -> bool:
    """True when X distinguishes: o(G + X) is not >= o(H + X)."""
    return not outcome_geq(misere_outcome(add(g, x)), misere_outcome(add(h, x)))
