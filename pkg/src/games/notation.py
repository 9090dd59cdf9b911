"""
Game notation: parsing and printing.

Grammar:

    expr := term ("+" term)*
    term := "0" | "*" | INT | "I" | "S" | "Z" | "Ga"
          | "B(" INT ")" | "s(" INT ")"
          | "conj(" expr ")" | "adj(" expr ")" | "tilde(" expr "," INT ")"
          | "{" list "|" list "}"
    list := empty | expr ("," expr)*

"+" is the disjunctive sum and is expanded on elaboration.
"""

from dataclasses import dataclass
from typing import Optional, Union

from src.constants import (
    MAX_FAMILY_INDEX,
    MAX_INTEGER_LITERAL,
    NAMED_FAMILY_LIMIT,
    PRINT_STYLE_BRACES,
    PRINT_STYLE_NAMED,
)
from src.games.constructions import (
    NAMED_GAMES,
    adjoint,
    b_game,
    integer,
    s_game,
    tilde,
)
from src.games.core import ZERO, GameId, conjugate, intern, node, sum_all


class GameSyntaxError(ValueError):
    """Raised for malformed game expressions; carries the byte offset."""

    def __init__(self, message: str, offset: int) -> None:
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


# =============================================================================
# AST
# =============================================================================


@dataclass(frozen=True)
class Literal:
    """0, * or a non-negative integer."""

    value: Union[str, int]


@dataclass(frozen=True)
class Name:
    name: str


@dataclass(frozen=True)
class Family:
    """B(i) or s(i)."""

    name: str
    index: int


@dataclass(frozen=True)
class Call:
    """conj(e), adj(e) or tilde(e, i)."""

    function: str
    argument: "GameExpr"
    index: Optional[int] = None


@dataclass(frozen=True)
class Braces:
    left: tuple["GameExpr", ...]
    right: tuple["GameExpr", ...]


@dataclass(frozen=True)
class Sum:
    terms: tuple["GameExpr", ...]


GameExpr = Union[Literal, Name, Family, Call, Braces, Sum]


# =============================================================================
# Tokenizer
# =============================================================================


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "ident", "punct" or "end"
    text: str
    offset: int


PUNCTUATION = set("{}|,()+*")


def tokenize(source: str) -> list[Token]:
    """Split an expression into tokens, each tagged with its byte offset."""
    if not source.isascii():
        offset = next(i for i, c in enumerate(source) if not c.isascii())
        raise GameSyntaxError("Only ASCII characters are supported", offset)

    tokens: list[Token] = []
    position = 0
    while position < len(source):
        c = source[position]
        if c.isspace():
            position += 1
            continue
        start = position
        if c.isdigit():
            while position < len(source) and source[position].isdigit():
                position += 1
            tokens.append(Token("int", source[start:position], start))
            continue
        if c.isalpha():
            while position < len(source) and source[position].isalpha():
                position += 1
            tokens.append(Token("ident", source[start:position], start))
            continue
        if c in PUNCTUATION:
            tokens.append(Token("punct", c, start))
            position += 1
            continue
        raise GameSyntaxError(f"Unexpected character '{c}'", start)
    tokens.append(Token("end", "", len(source)))
    return tokens


# =============================================================================
# Parser
# =============================================================================


FIXED_NAMES = {"I", "S", "Z", "Ga"}
FAMILY_NAMES = {"B", "s"}


class _Parser:
    def __init__(self, tokens: list[Token]) -> None:
        self.tokens = tokens
        self.position = 0

    def peek(self) -> Token:
        return self.tokens[self.position]

    def advance(self) -> Token:
        token = self.tokens[self.position]
        if token.kind != "end":
            self.position += 1
        return token

    def expect(self, text: str) -> Token:
        token = self.advance()
        if token.text != text or token.kind == "end":
            found = token.text or "end of input"
            raise GameSyntaxError(f"Expected '{text}', found '{found}'", token.offset)
        return token

    def index(self, limit: int) -> int:
        token = self.advance()
        if token.kind != "int":
            raise GameSyntaxError("Expected an integer index", token.offset)
        if token.text != "0" and token.text.startswith("0"):
            raise GameSyntaxError("Leading zeros are not allowed", token.offset)
        value = int(token.text)
        if value > limit:
            raise GameSyntaxError(
                f"Integer {value} exceeds the limit of {limit}", token.offset
            )
        return value

    def expr(self) -> GameExpr:
        terms = [self.term()]
        while self.peek().text == "+" and self.peek().kind == "punct":
            self.advance()
            terms.append(self.term())
        if len(terms) == 1:
            return terms[0]
        return Sum(tuple(terms))

    def options(self, closing: str) -> tuple[GameExpr, ...]:
        if self.peek().text == closing:
            return ()
        items = [self.expr()]
        while self.peek().text == ",":
            self.advance()
            items.append(self.expr())
        return tuple(items)

    def term(self) -> GameExpr:
        token = self.peek()

        if token.kind == "int":
            value = int(token.text)
            if token.text != "0" and token.text.startswith("0"):
                raise GameSyntaxError("Leading zeros are not allowed", token.offset)
            if value > MAX_INTEGER_LITERAL:
                raise GameSyntaxError(
                    f"Integer {value} exceeds the limit of {MAX_INTEGER_LITERAL}",
                    token.offset,
                )
            self.advance()
            return Literal("0" if value == 0 else value)

        if token.kind == "punct" and token.text == "*":
            self.advance()
            return Literal("*")

        if token.kind == "punct" and token.text == "{":
            self.advance()
            left = self.options("|")
            self.expect("|")
            right = self.options("}")
            self.expect("}")
            return Braces(left, right)

        if token.kind == "ident":
            self.advance()
            if token.text in FIXED_NAMES:
                return Name(token.text)
            if token.text in FAMILY_NAMES:
                self.expect("(")
                index = self.index(MAX_FAMILY_INDEX)
                self.expect(")")
                return Family(token.text, index)
            if token.text in ("conj", "adj"):
                self.expect("(")
                argument = self.expr()
                self.expect(")")
                return Call(token.text, argument)
            if token.text == "tilde":
                self.expect("(")
                argument = self.expr()
                self.expect(",")
                index = self.index(MAX_FAMILY_INDEX)
                self.expect(")")
                return Call("tilde", argument, index)
            raise GameSyntaxError(f"Unknown name '{token.text}'", token.offset)

        found = token.text or "end of input"
        raise GameSyntaxError(f"Unexpected '{found}'", token.offset)


def parse(source: str) -> GameExpr:
    """
    Parse an expression into its syntax tree.

    Args:
        source: Expression text

    Returns:
        GameExpr syntax tree

    Raises:
        GameSyntaxError: With the offset of the offending token
    """
    parser = _Parser(tokenize(source))
    expression = parser.expr()
    trailing = parser.peek()
    if trailing.kind != "end":
        raise GameSyntaxError(f"Unexpected '{trailing.text}'", trailing.offset)
    return expression


def elaborate(expression: GameExpr) -> GameId:
    """Build the interned game an expression denotes."""
    if isinstance(expression, Literal):
        if expression.value == "0":
            return ZERO
        if expression.value == "*":
            return NAMED_GAMES["*"]
        return integer(int(expression.value))
    if isinstance(expression, Name):
        return NAMED_GAMES[expression.name]
    if isinstance(expression, Family):
        builder = b_game if expression.name == "B" else s_game
        return builder(expression.index)
    if isinstance(expression, Call):
        argument = elaborate(expression.argument)
        if expression.function == "conj":
            return conjugate(argument)
        if expression.function == "adj":
            return adjoint(argument)
        return tilde(argument, expression.index or 0)
    if isinstance(expression, Braces):
        return intern(
            [elaborate(option) for option in expression.left],
            [elaborate(option) for option in expression.right],
        )
    return sum_all(elaborate(term) for term in expression.terms)


def parse_game(source: str) -> tuple[Optional[GameId], Optional[str]]:
    """
    Parse and elaborate an expression for user-facing callers.

    Args:
        source: Expression text

    Returns:
        Tuple of (game id or None, error message or None)
    """
    try:
        return elaborate(parse(source)), None
    except GameSyntaxError as e:
        return None, str(e)
    except RecursionError:
        return None, "Expression is nested too deeply to parse"


def game_from_text(source: str) -> GameId:
    """Parse and elaborate, raising GameSyntaxError on bad input."""
    return elaborate(parse(source))


# =============================================================================
# Printer
# =============================================================================


_NAME_TABLE: dict[GameId, str] = {}


def _name_table() -> dict[GameId, str]:
    # First registration wins, which fixes the priority order
    if not _NAME_TABLE:
        entries: list[tuple[str, GameId]] = [("0", ZERO), ("*", NAMED_GAMES["*"])]
        entries += [(str(n), integer(n)) for n in range(1, NAMED_FAMILY_LIMIT + 1)]
        entries += [(name, NAMED_GAMES[name]) for name in ("I", "S", "Z", "Ga")]
        entries += [(f"B({i})", b_game(i)) for i in range(1, NAMED_FAMILY_LIMIT + 1)]
        entries += [(f"s({i})", s_game(i)) for i in range(2, NAMED_FAMILY_LIMIT + 1)]
        for name, game in entries:
            _NAME_TABLE.setdefault(game, name)
    return _NAME_TABLE


def print_game(game: GameId, style: str = PRINT_STYLE_BRACES) -> str:
    """
    Render a game as text.

    Args:
        game: Game id
        style: "braces" for pure brace notation, "named" to substitute
            known names at every node

    Returns:
        Expression text that parses back to the same game
    """
    if style == PRINT_STYLE_NAMED:
        name = _name_table().get(game)
        if name is not None:
            return name
    elif game == ZERO:
        return "0"

    gn = node(game)
    left = ",".join(print_game(option, style) for option in gn.left)
    right = ",".join(print_game(option, style) for option in gn.right)
    return "{" + left + "|" + right + "}"
