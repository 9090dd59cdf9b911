"""Tests for misère and normal-play outcomes."""

import pytest

from src.census.enumerate import enumerate_space, sample_trees
from src.games.constructions import integer
from src.games.core import ZERO, add, conjugate, left_options, right_options
from src.games.notation import game_from_text
from src.games.solver import (
    Convention,
    Mover,
    Outcome,
    left_wins,
    misere_outcome,
    normal_outcome,
    outcome,
    outcome_geq,
)


@pytest.mark.parametrize(
    "text, expected",
    [
        ("0", Outcome.N),
        ("*", Outcome.P),
        ("1", Outcome.R),
        ("B(0)", Outcome.R),
        ("Ga", Outcome.R),
        ("I", Outcome.L),
        ("Z", Outcome.N),
        ("S", Outcome.L),
        ("s(2)", Outcome.N),
        ("{0,*|0}", Outcome.L),
        ("adj({0,*|0})", Outcome.N),
    ],
)
def test_misere_outcomes_of_named_games(text, expected):
    assert misere_outcome(game_from_text(text)) == expected


@pytest.mark.parametrize(
    "text, expected",
    [("0", Outcome.P), ("*", Outcome.N), ("1", Outcome.L), ("conj(1)", Outcome.R)],
)
def test_normal_outcomes(text, expected):
    assert normal_outcome(game_from_text(text)) == expected
    assert outcome(game_from_text(text), Convention.NORMAL) == expected


def test_left_wins_by_mover():
    assert left_wins(ZERO, Mover.FIRST)
    assert not left_wins(ZERO, Mover.SECOND)
    assert not left_wins(ZERO, Mover.FIRST, Convention.NORMAL)


def test_conjugate_swaps_outcome():
    for g in enumerate_space("all", 2):
        assert misere_outcome(conjugate(g)) == misere_outcome(g).conjugate()
        assert normal_outcome(conjugate(g)) == normal_outcome(g).conjugate()


def test_impartial_games_are_p_or_n():
    for g in enumerate_space("impartial", 3):
        assert misere_outcome(g) in (Outcome.P, Outcome.N)


def test_integers_are_right_wins_in_misere():
    for n in range(1, 6):
        assert misere_outcome(integer(n)) == Outcome.R


class TestOutcomeOrder:
    def test_extremes(self):
        for o in Outcome:
            assert outcome_geq(Outcome.L, o)
            assert outcome_geq(o, Outcome.R)

    def test_n_and_p_are_incomparable(self):
        assert not outcome_geq(Outcome.N, Outcome.P)
        assert not outcome_geq(Outcome.P, Outcome.N)

    def test_from_wins(self):
        assert Outcome.from_wins(True, True) == Outcome.L
        assert Outcome.from_wins(True, False) == Outcome.N
        assert Outcome.from_wins(False, True) == Outcome.P
        assert Outcome.from_wins(False, False) == Outcome.R


# Plain recursion with no memo table: the player who cannot move wins.
def _left_first_wins(game):
    options = left_options(game)
    return not options or any(not _right_first_wins(gl) for gl in options)


def _right_first_wins(game):
    options = right_options(game)
    return not options or any(not _left_first_wins(gr) for gr in options)


def _uncached_misere_outcome(game):
    return Outcome.from_wins(_left_first_wins(game), not _right_first_wins(game))


class TestAgainstUncachedRecursion:
    def test_sampled_day_four_games(self):
        for g in sample_trees("all", 4, 500, seed=4):
            assert misere_outcome(g) == _uncached_misere_outcome(g)

    def test_sums_of_sampled_day_two_games(self):
        games = sample_trees("all", 2, 100, seed=2)
        for g, h in zip(games[::2], games[1::2]):
            s = add(g, h)
            assert misere_outcome(s) == _uncached_misere_outcome(s)
