"""
Verification result structures.

This module defines dataclasses for check reports and their
counterexamples, and a tally used by checks while they run.
"""

from dataclasses import dataclass, field
from typing import Any, Optional

from src.constants import STATUS_FAIL, STATUS_PASS, STATUS_UNKNOWN
from src.games.core import GameId
from src.games.notation import print_game

# Counterexamples kept per report
MAX_COUNTEREXAMPLES = 50


@dataclass
class Counterexample:
    """A violated instance, with games in brace notation."""

    g: str
    expected: str
    got: str
    h: Optional[str] = None
    x: Optional[str] = None


@dataclass
class Report:
    """Result of running one theorem check."""

    theorem: str
    anchor: str
    params: dict[str, Any]
    status: str
    instances_checked: int
    counterexamples: list[Counterexample] = field(default_factory=list)
    elapsed_ms: int = 0
    instances_filtered: int = 0
    notes: list[str] = field(default_factory=list)


@dataclass
class CheckTally:
    """Accumulates instances while a check runs."""

    instances: int = 0
    filtered: int = 0
    unresolved: int = 0
    counterexamples: list[Counterexample] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def record(
        self,
        holds: bool,
        g: GameId,
        expected: str,
        got: str,
        h: Optional[GameId] = None,
        x: Optional[GameId] = None,
    ) -> None:
        """Count one instance and keep it as a counterexample if it fails."""
        self.instances += 1
        if holds:
            return
        if len(self.counterexamples) < MAX_COUNTEREXAMPLES:
            self.counterexamples.append(
                Counterexample(
                    g=print_game(g),
                    expected=expected,
                    got=got,
                    h=print_game(h) if h is not None else None,
                    x=print_game(x) if x is not None else None,
                )
            )

    def skip(self) -> None:
        """Count an instance excluded by a precondition."""
        self.filtered += 1

    def unresolved_instance(self, note: Optional[str] = None) -> None:
        """Count an instance a bounded search could not settle."""
        self.instances += 1
        self.unresolved += 1
        if note and len(self.notes) < MAX_COUNTEREXAMPLES:
            self.notes.append(note)

    def status(self) -> str:
        if self.counterexamples:
            return STATUS_FAIL
        if self.unresolved:
            return STATUS_UNKNOWN
        return STATUS_PASS

    def to_report(
        self, theorem: str, anchor: str, params: dict[str, Any], elapsed_ms: int = 0
    ) -> Report:
        return Report(
            theorem=theorem,
            anchor=anchor,
            params=dict(params),
            status=self.status(),
            instances_checked=self.instances,
            counterexamples=list(self.counterexamples),
            elapsed_ms=elapsed_ms,
            instances_filtered=self.filtered,
            notes=list(self.notes),
        )


def counterexample_to_dict(counterexample: Counterexample) -> dict[str, Any]:
    return {
        "g": counterexample.g,
        "h": counterexample.h,
        "x": counterexample.x,
        "expected": counterexample.expected,
        "got": counterexample.got,
    }


def report_to_dict(report: Report, include_elapsed: bool = True) -> dict[str, Any]:
    """
    Convert a Report to its JSON schema.

    Args:
        report: Report to convert
        include_elapsed: False drops the timing field for byte comparisons

    Returns:
        Dictionary with fixed keys
    """
    result: dict[str, Any] = {
        "theorem": report.theorem,
        "anchor": report.anchor,
        "params": report.params,
        "status": report.status,
        "instances_checked": report.instances_checked,
        "instances_filtered": report.instances_filtered,
        "counterexamples": [counterexample_to_dict(c) for c in report.counterexamples],
    }
    if include_elapsed:
        result["elapsed_ms"] = report.elapsed_ms
    return result


def calculate_run_summary(reports: list[Report]) -> dict[str, int]:
    """Count reports by status."""
    return {
        "total": len(reports),
        "passed": sum(1 for r in reports if r.status == STATUS_PASS),
        "failed": sum(1 for r in reports if r.status == STATUS_FAIL),
        "unknown": sum(1 for r in reports if r.status == STATUS_UNKNOWN),
        "instances": sum(r.instances_checked for r in reports),
    }
