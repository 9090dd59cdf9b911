"""Tests for universe comparisons: exact procedures, bounded search and dispatch."""

import pytest

from src.census.enumerate import enumerate_space
from src.comparison.dispatch import compare, exact_route
from src.comparison.exact import (
    build_downlink_witness,
    downlinked_db,
    ge_binary_db,
    ge_db_zero,
    ge_dicot_vs_binary_db,
    ge_normal,
    has_l_follower,
    refutation_witness_db,
    zero_certificate,
)
from src.comparison.search import first_distinguisher, first_distinguisher_among, refute_ge_bounded
from src.comparison.universe import (
    PreconditionError,
    UniverseSpec,
    Verdict,
    refutes,
    verdict_to_dict,
)
from src.constants import (
    METHOD_BINARY_RECURSION,
    METHOD_BOUNDED_SEARCH,
    METHOD_CARAC_TILDE,
    METHOD_CARAC_ZERO,
    METHOD_IMPARTIAL_CANONICAL,
    VERDICT_PROVED,
    VERDICT_REFUTED,
)
from src.games.constructions import GAME_GA, GAME_I, GAME_S, GAME_Z, adjoint, b_game, integer
from src.games.core import STAR, ZERO, add, intern, is_binary, is_dicot, left_options
from src.games.notation import game_from_text
from src.games.solver import Outcome, misere_outcome, outcome_geq

S2 = intern([STAR], [STAR])


class TestUniverseSpec:
    def test_unknown_filter(self):
        with pytest.raises(ValueError):
            UniverseSpec("tall", 2)

    def test_negative_bound(self):
        with pytest.raises(ValueError):
            UniverseSpec("dicot", -1)

    def test_contains(self):
        universe = UniverseSpec("binary-dicot", 2)
        assert universe.contains(GAME_Z)
        assert not universe.contains(GAME_S)

    def test_verdict_flags_and_dict(self):
        verdict = Verdict(VERDICT_REFUTED, METHOD_BOUNDED_SEARCH, STAR, 2)
        assert verdict.refuted and not verdict.proved and not verdict.unknown
        assert verdict_to_dict(verdict) == {
            "status": "refuted",
            "method": "bounded-search",
            "witness": "{0|0}",
            "bound": 2,
        }


class TestZeroCharacterisation:
    def test_known_values(self):
        assert ge_db_zero(ZERO)
        assert ge_db_zero(GAME_Z)
        assert not ge_db_zero(STAR)
        assert not ge_db_zero(GAME_GA)

    def test_certificate(self):
        assert zero_certificate(ZERO) == intern([GAME_GA], [ZERO])
        assert zero_certificate(STAR) == intern([b_game(1)], [ZERO])

    def test_certificate_refutes_when_not_above_zero(self):
        for g in enumerate_space("dicot", 2):
            if not ge_db_zero(g):
                assert refutes(g, ZERO, zero_certificate(g))


class TestBinaryRecursion:
    def test_s2_equivalent_to_zero(self):
        assert ge_binary_db(S2, ZERO)
        assert ge_binary_db(ZERO, S2)

    def test_ga_not_above_zero(self):
        assert not ge_binary_db(GAME_GA, ZERO)

    def test_z_strictly_above_zero(self):
        assert ge_binary_db(GAME_Z, ZERO)
        assert not ge_binary_db(ZERO, GAME_Z)

    def test_reflexive(self):
        for g in enumerate_space("binary", 2):
            assert ge_binary_db(g, g)

    def test_agrees_with_zero_characterisation(self):
        for g in enumerate_space("binary", 2):
            assert ge_binary_db(g, ZERO) == ge_db_zero(g)

    def test_requires_binary_games(self):
        with pytest.raises(PreconditionError) as exc_info:
            ge_binary_db(GAME_S, ZERO)
        assert exc_info.value.hypothesis == "binary-g"
        with pytest.raises(PreconditionError) as exc_info:
            downlinked_db(ZERO, GAME_S)
        assert exc_info.value.hypothesis == "binary-h"

    def test_refutation_witness(self):
        assert refutation_witness_db(GAME_GA, ZERO) == ZERO
        with pytest.raises(PreconditionError) as exc_info:
            refutation_witness_db(ZERO, ZERO)
        assert exc_info.value.hypothesis == "not-refuted"

    def test_every_refuted_pair_gets_a_binary_dicot_witness(self):
        games = enumerate_space("binary", 2).games
        for g in games:
            for h in games:
                if ge_binary_db(g, h):
                    continue
                x = refutation_witness_db(g, h)
                assert is_binary(x) and is_dicot(x)
                assert refutes(g, h, x)


class TestDownlink:
    def test_downlinked_values(self):
        assert downlinked_db(ZERO, ZERO)
        assert not downlinked_db(STAR, ZERO)
        assert downlinked_db(STAR, STAR)

    def test_zero_pair_witness_is_star(self):
        witness = build_downlink_witness(ZERO, ZERO)
        assert witness == STAR
        assert misere_outcome(add(ZERO, witness)) == Outcome.P

    def test_star_pair_witness_forces_p(self):
        witness = build_downlink_witness(STAR, STAR)
        assert is_binary(witness) and is_dicot(witness)
        assert misere_outcome(add(STAR, witness)) == Outcome.P

    def test_requires_downlinked_pair(self):
        with pytest.raises(PreconditionError):
            build_downlink_witness(STAR, ZERO)

    def test_every_downlinked_pair_is_separated(self):
        games = enumerate_space("binary", 2)
        pairs = [(g, h) for g in games for h in games if downlinked_db(g, h)]
        assert pairs
        for g, h in pairs:
            witness = build_downlink_witness(g, h)
            assert is_binary(witness) and is_dicot(witness)
            assert outcome_geq(Outcome.P, misere_outcome(add(g, witness)))
            assert outcome_geq(misere_outcome(add(h, witness)), Outcome.P)

    def test_no_downlink_below_a_larger_game(self):
        games = enumerate_space("binary", 2)
        for g in games:
            for h in games:
                if ge_binary_db(g, h):
                    assert not any(downlinked_db(g, hl) for hl in left_options(h))


class TestDicotAgainstBinary:
    def test_preconditions_are_named(self):
        wide = game_from_text("{{0|0,*}|0}")
        cases = [(integer(1), STAR, "dicot-g"), (ZERO, wide, "binary-h"), (ZERO, GAME_Z, "l-follower")]
        for g, h, hypothesis in cases:
            with pytest.raises(PreconditionError) as exc_info:
                ge_dicot_vs_binary_db(g, h)
            assert exc_info.value.hypothesis == hypothesis

    def test_l_followers(self):
        assert has_l_follower(GAME_I)
        assert has_l_follower(GAME_Z)
        assert not has_l_follower(STAR)

    def test_reflexive(self):
        for g in enumerate_space("binary-dicot", 2):
            if not has_l_follower(g):
                assert ge_dicot_vs_binary_db(g, g).proved

    def test_refutation_carries_dicot_witness(self):
        verdict = ge_dicot_vs_binary_db(ZERO, STAR)
        assert verdict.refuted
        assert verdict.method == METHOD_CARAC_TILDE
        assert is_dicot(verdict.witness)
        assert refutes(ZERO, STAR, verdict.witness)


class TestNormalPlay:
    def test_star_and_zero_incomparable(self):
        assert not ge_normal(STAR, ZERO)
        assert not ge_normal(ZERO, STAR)

    def test_integers(self):
        assert ge_normal(integer(1), ZERO)
        assert ge_normal(integer(2), integer(1))
        assert not ge_normal(ZERO, integer(1))


class TestBoundedSearch:
    def test_finds_first_witness(self):
        verdict = refute_ge_bounded(STAR, ZERO, UniverseSpec("all", 1))
        assert verdict.refuted
        assert verdict.witness == ZERO
        assert verdict.bound == 1

    def test_unknown_at_bound(self):
        verdict = refute_ge_bounded(ZERO, ZERO, UniverseSpec("all", 2))
        assert verdict.unknown
        assert verdict.witness is None
        assert verdict.bound == 2

    def test_zero_not_above_z(self):
        universe = UniverseSpec("binary-dicot", 2)
        verdict = refute_ge_bounded(ZERO, GAME_Z, universe)
        assert verdict.refuted
        assert universe.contains(verdict.witness)
        assert refutes(ZERO, GAME_Z, verdict.witness)

    def test_workers_give_the_same_witness(self):
        universe = UniverseSpec("all", 2)
        for g, h in [(STAR, ZERO), (ZERO, GAME_Z), (GAME_GA, integer(1)), (ZERO, ZERO)]:
            assert first_distinguisher(g, h, universe, workers=4) == first_distinguisher(g, h, universe)

    def test_first_distinguisher_among_candidates(self):
        assert first_distinguisher_among(STAR, ZERO, [ZERO]) == ZERO
        assert first_distinguisher_among(ZERO, ZERO, enumerate_space("all", 2)) is None
        assert first_distinguisher_among(STAR, ZERO, []) is None
        universe = UniverseSpec("binary-dicot", 2)
        found = first_distinguisher_among(ZERO, GAME_Z, enumerate_space("binary-dicot", 2))
        assert found == first_distinguisher(ZERO, GAME_Z, universe)


class TestDispatch:
    def test_routes(self):
        dicot = UniverseSpec("dicot", 2)
        assert exact_route(GAME_Z, ZERO, dicot) == METHOD_CARAC_ZERO
        assert exact_route(GAME_Z, GAME_GA, dicot) == METHOD_BINARY_RECURSION
        assert exact_route(GAME_S, STAR, dicot) == METHOD_CARAC_TILDE
        assert exact_route(add(STAR, STAR), STAR, UniverseSpec("impartial", 2)) == METHOD_IMPARTIAL_CANONICAL
        assert exact_route(GAME_S, STAR, UniverseSpec("all", 2)) is None

    def test_z_above_zero(self):
        verdict = compare(GAME_Z, ZERO, UniverseSpec("binary-dicot", 2))
        assert verdict.status == VERDICT_PROVED
        assert verdict.method == METHOD_CARAC_ZERO

    def test_zero_not_above_z(self):
        universe = UniverseSpec("binary-dicot", 2)
        verdict = compare(ZERO, GAME_Z, universe)
        assert verdict.refuted
        assert verdict.method == METHOD_BINARY_RECURSION
        assert universe.contains(verdict.witness)
        assert refutes(ZERO, GAME_Z, verdict.witness)

    def test_i_not_above_zero_modulo_dicots(self):
        verdict = compare(GAME_I, ZERO, UniverseSpec("dicot", 2))
        assert verdict.refuted
        assert verdict.method == METHOD_CARAC_ZERO
        assert verdict.witness == adjoint(GAME_I)

    def test_impartial_equivalence(self):
        universe = UniverseSpec("impartial", 2)
        assert compare(add(STAR, STAR), ZERO, universe).proved
        verdict = compare(STAR, ZERO, universe)
        assert verdict.refuted
        assert verdict.method == METHOD_IMPARTIAL_CANONICAL
        if verdict.witness is not None:
            assert refutes(STAR, ZERO, verdict.witness)

    def test_fallback_search(self):
        verdict = compare(STAR, ZERO, UniverseSpec("all", 1))
        assert verdict.method == METHOD_BOUNDED_SEARCH
        assert verdict.witness == ZERO
