"""Tests for union-find classification and census runs."""

import pytest

from src.census.classify import (
    ClassificationError,
    DisjointSet,
    approximate_dicot_census,
    census_binary_dicot,
    classify,
    count_minimal_members,
)
from src.census.enumerate import ResourceCeilingError, enumerate_space
from src.comparison.exact import ge_binary_db
from src.constants import DICOT_3_CLASSES
from src.games.constructions import GAME_GA, GAME_Z
from src.games.core import STAR, ZERO, intern
from src.games.solver import misere_outcome


class TestDisjointSet:
    def test_root_is_earliest_registered(self):
        ds = DisjointSet()
        for e in "abcd":
            ds.make_set(e)
        ds.union("d", "b")
        ds.union("c", "d")
        assert ds.find("c") == "b"
        assert ds.find("d") == "b"
        assert ds.groups() == [["a"], ["b", "c", "d"]]

    def test_union_order_does_not_matter(self):
        first, second = DisjointSet(), DisjointSet()
        for ds in (first, second):
            for e in range(6):
                ds.make_set(e)
        for x, y in [(5, 1), (3, 5), (2, 4)]:
            first.union(x, y)
        for x, y in [(4, 2), (1, 3), (5, 3)]:
            second.union(x, y)
        assert first.groups() == second.groups() == [[0], [1, 3, 5], [2, 4]]


class TestClassify:
    def test_outcome_classes(self):
        space = enumerate_space("binary-dicot", 2)
        table = classify(space, lambda g, h: misere_outcome(g) == misere_outcome(h))
        assert table.class_count == 4
        assert [c.representative for c in table.classes][:2] == [ZERO, STAR]
        assert table.class_of(intern([STAR], [STAR])).representative == ZERO

    def test_class_of_unknown_game(self):
        table = classify(enumerate_space("binary-dicot", 1), lambda g, h: g == h)
        with pytest.raises(KeyError):
            table.class_of(GAME_Z)

    def test_rejects_non_reflexive_relation(self):
        with pytest.raises(ClassificationError):
            classify(enumerate_space("binary-dicot", 2), lambda g, h: False)

    def test_rejects_non_symmetric_relation(self):
        with pytest.raises(ClassificationError):
            classify(enumerate_space("binary-dicot", 2), lambda g, h: g <= h)

    def test_minimal_members_of_singletons(self):
        table = classify(enumerate_space("binary-dicot", 2), lambda g, h: g == h)
        assert count_minimal_members(table) == table.class_count == 5


class TestCensus:
    def test_binary_dicot_born_by_two(self):
        result = census_binary_dicot(2)
        assert result.trees == 5
        assert result.classes == 4
        assert result.expected_classes is None

    @pytest.mark.slow
    def test_binary_dicot_born_by_three(self):
        result = census_binary_dicot(3)
        assert result.trees == 26
        assert result.classes == 13
        assert result.expected_classes == 13
        assert result.minimal_members <= result.classes

    def test_approximate_dicot_census(self):
        result = approximate_dicot_census(1, 1)
        assert result.trees == 2
        assert result.classes == 2
        assert not result.flagged

    def test_approximation_grows_with_distinguishers(self):
        coarse = approximate_dicot_census(2, 1)
        fine = approximate_dicot_census(2, 2)
        assert coarse.trees == fine.trees == 10
        assert coarse.classes <= fine.classes <= 10
        assert len(fine.notes) == 1

    def test_day_three_space_is_refused_under_default_ceiling(self):
        with pytest.raises(ResourceCeilingError):
            approximate_dicot_census(3, 1)

    def test_sampled_day_three_census(self):
        coarse = approximate_dicot_census(3, 1, samples=200, seed=20)
        fine = approximate_dicot_census(3, 2, samples=200, seed=20)
        assert fine.name == "dicot-3-sample-200-approx-2"
        assert coarse.trees == fine.trees <= 200
        assert coarse.classes <= fine.classes <= min(fine.trees, DICOT_3_CLASSES)
        assert f"The full census has {DICOT_3_CLASSES} classes" in fine.notes

    def test_ga_is_its_own_class(self):
        space = enumerate_space("binary-dicot", 2)
        table = classify(space, lambda g, h: ge_binary_db(g, h) and ge_binary_db(h, g))
        assert table.class_of(GAME_GA).members == [GAME_GA]
