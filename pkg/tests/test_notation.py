"""Tests for the game expression parser and printer."""

import pytest

from src.census.enumerate import enumerate_space
from src.constants import PRINT_STYLE_NAMED
from src.games.constructions import GAME_GA, GAME_I, GAME_Z, b_game, integer, s_game
from src.games.core import STAR, ZERO, add, conjugate, intern
from src.games.notation import (
    GameSyntaxError,
    Sum,
    game_from_text,
    parse,
    parse_game,
    print_game,
    tokenize,
)


class TestParse:
    @pytest.mark.parametrize(
        "text, expected",
        [
            ("0", ZERO),
            ("*", STAR),
            ("3", integer(3)),
            ("Ga", GAME_GA),
            ("B(0)", GAME_GA),
            ("I", GAME_I),
            ("Z", GAME_Z),
            ("s(2)", intern([STAR], [STAR])),
            ("{0|*}", GAME_GA),
            ("{|}", ZERO),
            ("{0|0}", STAR),
            ("* + *", add(STAR, STAR)),
            ("conj(1)", conjugate(integer(1))),
            ("adj(0)", STAR),
            ("tilde(0, 0)", intern([GAME_GA], [ZERO])),
            ("{I|*}", GAME_Z),
        ],
    )
    def test_values(self, text, expected):
        assert game_from_text(text) == expected

    def test_whitespace_is_ignored(self):
        assert game_from_text("  { 0 , * |  0 }  ") == game_from_text("{0,*|0}")

    def test_sum_expression_tree(self):
        expression = parse("1 + * + Ga")
        assert isinstance(expression, Sum)
        assert len(expression.terms) == 3

    def test_family_limits(self):
        assert game_from_text("B(12)") == b_game(12)
        assert game_from_text("64") == integer(64)

    def test_tokenize_offsets(self):
        tokens = tokenize("{0| Ga}")
        assert [(t.kind, t.text, t.offset) for t in tokens] == [
            ("punct", "{", 0),
            ("int", "0", 1),
            ("punct", "|", 2),
            ("ident", "Ga", 4),
            ("punct", "}", 6),
            ("end", "", 7),
        ]


class TestSyntaxErrors:
    @pytest.mark.parametrize(
        "text, offset, fragment",
        [
            ("{0|", 3, "end of input"),
            ("{0|*} junk", 6, "junk"),
            ("007", 0, "Leading zeros"),
            ("B(01)", 2, "Leading zeros"),
            ("tilde(*,007)", 8, "Leading zeros"),
            ("65", 0, "exceeds"),
            ("B(13)", 2, "exceeds"),
            ("foo", 0, "Unknown name"),
            ("0 $", 2, "Unexpected character"),
            ("{0|∗}", 3, "ASCII"),
            ("", 0, "end of input"),
        ],
    )
    def test_errors_carry_offsets(self, text, offset, fragment):
        with pytest.raises(GameSyntaxError) as exc_info:
            game_from_text(text)
        assert exc_info.value.offset == offset
        assert fragment in str(exc_info.value)
        assert str(exc_info.value).endswith(f"at offset {offset}")

    def test_parse_game_returns_error_tuple(self):
        game, error = parse_game("{0|")
        assert game is None
        assert "offset 3" in error

        game, error = parse_game("Z")
        assert game == GAME_Z
        assert error is None

    def test_deep_nesting_is_an_error_not_a_crash(self):
        game, error = parse_game("{" * 2000 + "|}" * 2000)
        assert game is None
        assert "nested too deeply" in error

    def test_index_zero_is_still_accepted(self):
        assert game_from_text("tilde(*,0)") is not None


class TestPrint:
    @pytest.mark.parametrize(
        "game, expected",
        [
            (ZERO, "0"),
            (STAR, "{0|0}"),
            (GAME_GA, "{0|{0|0}}"),
            (integer(2), "{{0|}|}"),
        ],
    )
    def test_braces(self, game, expected):
        assert print_game(game) == expected

    @pytest.mark.parametrize(
        "game, expected",
        [
            (ZERO, "0"),
            (STAR, "*"),
            (integer(3), "3"),
            (GAME_GA, "Ga"),
            (b_game(0), "Ga"),
            (GAME_Z, "Z"),
            (s_game(2), "s(2)"),
            (intern([GAME_GA], [ZERO]), "{Ga|0}"),
        ],
    )
    def test_named(self, game, expected):
        assert print_game(game, PRINT_STYLE_NAMED) == expected

    def test_printed_forms_parse_back(self):
        for g in enumerate_space("all", 2):
            assert game_from_text(print_game(g)) == g
            assert game_from_text(print_game(g, PRINT_STYLE_NAMED)) == g
