"""Tests for the interned game store and game arithmetic."""

from concurrent.futures import ThreadPoolExecutor

import pytest

from src.census.enumerate import enumerate_space
from src.games.constructions import GAME_GA, GAME_I, GAME_S, GAME_Z, integer, s_game
from src.games.core import (
    STAR,
    ZERO,
    UnknownGameError,
    add,
    birthday,
    conjugate,
    followers,
    intern,
    interned_count,
    is_binary,
    is_dicot,
    is_impartial,
    is_left_end,
    is_right_end,
    left_options,
    node,
    right_options,
    sum_all,
)


class TestInterning:
    def test_zero_and_star(self):
        assert left_options(ZERO) == ()
        assert right_options(ZERO) == ()
        assert left_options(STAR) == (ZERO,)
        assert right_options(STAR) == (ZERO,)

    def test_option_order_and_duplicates_are_irrelevant(self):
        a = intern([STAR, ZERO], [ZERO])
        b = intern([ZERO, STAR, STAR], [ZERO, ZERO])
        assert a == b
        assert node(a).left == (ZERO, STAR)

    def test_same_node_same_id(self):
        before = interned_count()
        assert intern([ZERO], [STAR]) == GAME_GA
        assert interned_count() == before

    def test_unknown_option_rejected(self):
        with pytest.raises(UnknownGameError):
            intern([10**9], [])

    def test_unknown_id_rejected(self):
        with pytest.raises(UnknownGameError):
            node(-1)

    def test_concurrent_interning_yields_one_id(self):
        left, right = integer(40), integer(41)
        with ThreadPoolExecutor(max_workers=8) as pool:
            ids = set(pool.map(lambda _: intern([left], [right]), range(64)))
        assert len(ids) == 1


class TestArithmetic:
    def test_zero_is_identity(self):
        for g in enumerate_space("all", 2):
            assert add(ZERO, g) == g
            assert add(g, ZERO) == g

    def test_sum_is_commutative(self):
        games = enumerate_space("all", 1).games
        for g in games:
            for h in games:
                assert add(g, h) == add(h, g)

    def test_sum_is_associative(self):
        games = [STAR, GAME_GA, integer(1), conjugate(integer(1))]
        for g in games:
            for h in games:
                for k in games:
                    assert add(add(g, h), k) == add(g, add(h, k))

    def test_star_plus_star(self):
        assert add(STAR, STAR) == intern([STAR], [STAR])

    def test_sum_all(self):
        assert sum_all([]) == ZERO
        assert sum_all([STAR]) == STAR
        assert sum_all([STAR, STAR, STAR]) == add(add(STAR, STAR), STAR)

    def test_conjugate(self):
        assert conjugate(ZERO) == ZERO
        assert conjugate(STAR) == STAR
        assert conjugate(integer(1)) == intern([], [ZERO])
        for g in enumerate_space("all", 2):
            assert conjugate(conjugate(g)) == g


class TestStructure:
    @pytest.mark.parametrize(
        "game, expected",
        [(ZERO, 0), (STAR, 1), (GAME_GA, 2), (GAME_I, 3), (GAME_Z, 4), (integer(5), 5)],
    )
    def test_birthday(self, game, expected):
        assert birthday(game) == expected

    def test_followers(self):
        assert followers(ZERO) == frozenset({ZERO})
        assert followers(STAR) == frozenset({ZERO, STAR})
        assert GAME_I in followers(GAME_Z)

    def test_ends(self):
        assert is_left_end(ZERO)
        assert is_right_end(integer(1))
        assert not is_left_end(integer(1))
        assert not is_right_end(STAR)

    def test_dicot(self):
        for game in (ZERO, STAR, GAME_GA, GAME_I, GAME_Z, GAME_S):
            assert is_dicot(game)
        assert not is_dicot(integer(1))
        assert not is_dicot(intern([ZERO], [integer(1)]))

    def test_binary(self):
        assert is_binary(GAME_Z)
        assert is_binary(integer(3))
        assert not is_binary(GAME_S)

    def test_impartial(self):
        assert is_impartial(ZERO)
        assert is_impartial(STAR)
        assert is_impartial(s_game(3))
        assert not is_impartial(GAME_GA)
        assert not is_impartial(intern([STAR], [STAR, ZERO]))
