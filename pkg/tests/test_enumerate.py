"""Tests for tree enumeration, size prediction and sampling."""

import pytest

from src.census.enumerate import (
    ResourceCeilingError,
    describe_size,
    enumerate_space,
    enumeration_ceiling,
    in_filter,
    predicted_size,
    sample_trees,
    set_enumeration_ceiling,
)
from src.constants import MAX_ENUMERATION_SIZE, UNIVERSE_FILTERS
from src.games.constructions import GAME_GA, GAME_S, GAME_Z, integer
from src.games.core import STAR, ZERO, birthday, intern, is_dicot


@pytest.mark.parametrize(
    "filter_name, sizes",
    [
        ("all", [1, 4, 256]),
        ("binary", [1, 4, 25, 676]),
        ("binary-dicot", [1, 2, 5, 26]),
        ("dicot", [1, 2, 10, 1046530]),
        ("impartial", [1, 2, 4, 16, 65536]),
        ("impartial-binary", [1, 2, 3, 4, 5, 6]),
    ],
)
def test_predicted_sizes(filter_name, sizes):
    assert [predicted_size(filter_name, b) for b in range(len(sizes))] == sizes


def test_predicted_sizes_are_exact_past_64_bits():
    assert predicted_size("all", 4) == 4**256
    assert predicted_size("impartial", 5) == 2**65536
    assert predicted_size("all", 5) is None


def test_capped_sizes_saturate():
    assert predicted_size("all", 4, cap=1000) == 1000
    assert predicted_size("dicot", 12, cap=10**6) == 10**6
    assert predicted_size("dicot", 2, cap=1000) == 10


@pytest.mark.parametrize(
    "filter_name, bound, expected",
    [
        ("dicot", 3, "1046530"),
        ("all", 4, str(4**256)),
        ("impartial", 5, "at least 2^65536"),
        ("all", 5, "more than 2^1048576"),
    ],
)
def test_describe_size(filter_name, bound, expected):
    assert describe_size(filter_name, bound) == expected


@pytest.mark.parametrize(
    "filter_name, bound",
    [
        ("all", 2),
        ("binary", 2),
        ("binary-dicot", 3),
        ("dicot", 2),
        ("impartial", 3),
        ("impartial-binary", 4),
    ],
)
def test_enumeration_matches_prediction(filter_name, bound):
    space = enumerate_space(filter_name, bound)
    assert space.size == predicted_size(filter_name, bound)
    assert len(set(space.games)) == space.size
    for game in space:
        assert in_filter(game, filter_name)
        assert birthday(game) <= bound


def test_each_space_extends_the_previous_one():
    for filter_name in UNIVERSE_FILTERS:
        smaller = enumerate_space(filter_name, 1).games
        larger = enumerate_space(filter_name, 2).games
        assert larger[: len(smaller)] == smaller


def test_small_spaces_in_order():
    assert enumerate_space("all", 0).games == (ZERO,)
    assert enumerate_space("binary-dicot", 1).games == (ZERO, STAR)
    assert set(enumerate_space("binary-dicot", 2).games) == {
        ZERO,
        STAR,
        GAME_GA,
        intern([STAR], [ZERO]),
        intern([STAR], [STAR]),
    }


def test_invalid_arguments():
    with pytest.raises(ValueError):
        enumerate_space("tall", 1)
    with pytest.raises(ValueError):
        enumerate_space("all", -1)
    with pytest.raises(ValueError):
        predicted_size("tall", 1)


class TestCeiling:
    def test_large_space_refused(self):
        with pytest.raises(ResourceCeilingError):
            enumerate_space("dicot", 3)

    def test_explicit_ceiling(self):
        with pytest.raises(ResourceCeilingError):
            enumerate_space("all", 3, ceiling=10**6)

    def test_configured_ceiling(self):
        set_enumeration_ceiling(1000)
        assert enumeration_ceiling() == 1000
        with pytest.raises(ResourceCeilingError):
            enumerate_space("impartial", 4)

    def test_ceiling_must_be_positive(self):
        with pytest.raises(ValueError):
            set_enumeration_ceiling(0)
        assert enumeration_ceiling() == MAX_ENUMERATION_SIZE


class TestFilters:
    def test_in_filter(self):
        assert in_filter(GAME_Z, "binary-dicot")
        assert not in_filter(GAME_S, "binary")
        assert in_filter(GAME_S, "dicot")
        assert not in_filter(integer(1), "dicot")
        assert in_filter(integer(1), "binary")
        assert in_filter(STAR, "impartial-binary")

    def test_unknown_filter(self):
        with pytest.raises(ValueError):
            in_filter(ZERO, "tall")


class TestSampling:
    def test_same_seed_same_trees(self):
        assert sample_trees("dicot", 3, 20, seed=7) == sample_trees("dicot", 3, 20, seed=7)

    def test_samples_respect_filter_and_bound(self):
        for game in sample_trees("dicot", 3, 50, seed=1):
            assert is_dicot(game)
            assert birthday(game) <= 3
        for game in sample_trees("impartial", 4, 20, seed=2):
            assert in_filter(game, "impartial")
            assert birthday(game) <= 4
