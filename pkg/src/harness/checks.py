"""
Theorem checks.

Each check runs a scaled-down version of one result over an enumerated
space and tallies every instance. The registry at the bottom maps check ids
to their anchor statement, default parameters and check function.
"""

from dataclasses import dataclass, field
from typing import Any, Callable, Optional

from src.census.classify import census_binary_dicot
from src.census.enumerate import enumerate_space, sample_trees
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
from src.comparison.search import first_distinguisher, first_distinguisher_among
from src.comparison.universe import (
    PreconditionError,
    UniverseSpec,
    WitnessNotFoundError,
    refutes,
)
from src.constants import (
    BINARY_DICOT_3_TREES,
    FILTER_ALL,
    FILTER_BINARY,
    FILTER_BINARY_DICOT,
    FILTER_DICOT,
    FILTER_IMPARTIAL,
)
from src.games.constructions import (
    GAME_GA,
    GAME_I,
    GAME_S,
    GAME_Z,
    adjoint,
    b_game,
    bi_companions,
    companions,
    integer,
    s_game,
    tilde,
)
from src.games.core import (
    STAR,
    ZERO,
    GameId,
    add,
    birthday,
    conjugate,
    intern,
    is_binary,
    is_dicot,
    left_options,
    right_options,
    sum_all,
)
from src.games.notation import game_from_text
from src.games.solver import Mover, Outcome, left_wins, misere_outcome, outcome_geq
from src.harness.results import CheckTally
from src.impartial.canonical import (
    I_TO_D_ANCHOR,
    canonical_impartial,
    equivalent_impartial,
    i_to_d_tally,
)

# o(G^o) and o(tilde(G, b(G))) as a function of o(G), for binary G
BINARY_ADJOINT_OUTCOME = {
    Outcome.L: Outcome.L,
    Outcome.R: Outcome.R,
    Outcome.N: Outcome.P,
    Outcome.P: Outcome.N,
}

OUTCOME_TABLE = [
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
]

# Impartial canonical classes by birthday bound
KNOWN_IMPARTIAL_CLASSES = {0: 1, 1: 2, 2: 3, 3: 5, 4: 22}


def _space(filter_name: str, bound: int) -> tuple[GameId, ...]:
    return enumerate_space(filter_name, bound).games


def _o(game: GameId) -> Outcome:
    return misere_outcome(game)


def _o_sum(g: GameId, h: GameId) -> Outcome:
    return misere_outcome(add(g, h))


# =============================================================================
# Outcomes and companions
# =============================================================================


def check_outcomes(params: dict[str, Any]) -> CheckTally:
    """Outcomes of the named games; impartial games are only P or N."""
    tally = CheckTally()
    for text, expected in OUTCOME_TABLE:
        game = game_from_text(text)
        got = _o(game)
        tally.record(got == expected, game, expected.value, got.value)

    for x in _space(FILTER_IMPARTIAL, params["x_bound"]):
        got = _o(x)
        tally.record(got in (Outcome.P, Outcome.N), x, "P or N", got.value)
    return tally


def check_il(params: dict[str, Any]) -> CheckTally:
    tally = CheckTally()
    for x in _space(FILTER_IMPARTIAL, params["x_bound"]):
        got = _o_sum(GAME_I, x)
        tally.record(got == Outcome.L, GAME_I, "L", got.value, x=x)
    return tally


def check_ggir(params: dict[str, Any]) -> CheckTally:
    tally = CheckTally()
    i = params["i"]
    b_i = b_game(i)
    for g in _space(FILTER_ALL, params["g_bound"]):
        if i < birthday(g):
            tally.skip()
            continue
        got = _o_sum(g, b_i)
        tally.record(got == Outcome.R, g, "R", got.value, x=b_i)
    return tally


def check_ggir_corollary(params: dict[str, Any]) -> CheckTally:
    tally = CheckTally()
    i = params["i"]
    for g in _space(FILTER_ALL, params["g_bound"]):
        if i < birthday(g):
            tally.skip()
            continue
        partners = bi_companions(g, i)
        got = (_o_sum(g, partners.for_r), _o_sum(g, partners.for_l), _o_sum(g, partners.for_n))
        expected = (Outcome.R, Outcome.L, Outcome.N)
        tally.record(
            got == expected,
            g,
            "".join(o.value for o in expected),
            "".join(o.value for o in got),
        )
    return tally


def check_adjoint_sum(params: dict[str, Any]) -> CheckTally:
    tally = CheckTally()
    for g in _space(FILTER_ALL, params["g_bound"]):
        got = _o_sum(g, adjoint(g))
        tally.record(got == Outcome.P, g, "P", got.value, x=adjoint(g))
    return tally


def check_companions(params: dict[str, Any]) -> CheckTally:
    tally = CheckTally()
    expected = (Outcome.P, Outcome.N, Outcome.L, Outcome.R)
    for g in _space(FILTER_ALL, params["g_bound"]):
        partners = companions(g)
        got = tuple(_o_sum(g, partner) for partner in partners)
        tally.record(
            got == expected,
            g,
            "".join(o.value for o in expected),
            "".join(o.value for o in got),
        )
    return tally


def check_adjoint_dicot(params: dict[str, Any]) -> CheckTally:
    tally = CheckTally()
    for g in _space(FILTER_ALL, params["g_bound"]):
        tally.record(is_dicot(adjoint(g)), g, "dicot adjoint", "not dicot")
    for g in _space(FILTER_BINARY, params["binary_bound"]):
        g_adj = adjoint(g)
        tally.record(
            is_binary(g_adj) and is_dicot(g_adj),
            g,
            "binary dicot adjoint",
            "not binary dicot",
        )
    return tally


def check_adjout(params: dict[str, Any]) -> CheckTally:
    tally = CheckTally()
    for g in _space(FILTER_BINARY, params["binary_bound"]):
        expected = BINARY_ADJOINT_OUTCOME[_o(g)]
        got = _o(adjoint(g))
        tally.record(got == expected, g, expected.value, got.value)

    # The table does not extend to games with two Left options
    wide = game_from_text("{0,*|0}")
    got = (_o(wide), _o(adjoint(wide)))
    tally.record(got == (Outcome.L, Outcome.N), wide, "LN", got[0].value + got[1].value)
    return tally


def check_adjiout(params: dict[str, Any]) -> CheckTally:
    tally = CheckTally()
    for g in _space(FILTER_BINARY, params["binary_bound"]):
        expected = BINARY_ADJOINT_OUTCOME[_o(g)]
        got = _o(tilde(g, birthday(g)))
        tally.record(got == expected, g, expected.value, got.value)
    return tally


def check_tilde_sum(params: dict[str, Any]) -> CheckTally:
    tally = CheckTally()
    for g in _space(FILTER_BINARY, params["binary_bound"]):
        x = tilde(g, birthday(g))
        got = _o_sum(g, x)
        tally.record(got == Outcome.P, g, "P", got.value, x=x)
    return tally


def check_adjoint_incomparable(params: dict[str, Any]) -> CheckTally:
    tally = CheckTally()
    for g in _space(FILTER_ALL, params["g_bound"]):
        g_adj = adjoint(g)
        partner = add(adjoint(g_adj), STAR)
        got = (_o_sum(g, g_adj), _o_sum(partner, g_adj))
        tally.record(
            got == (Outcome.P, Outcome.N),
            g,
            "PN",
            got[0].value + got[1].value,
            h=partner,
            x=g_adj,
        )
    return tally


# =============================================================================
# Incomparability and upper bounds
# =============================================================================


def check_s_incomparable(params: dict[str, Any]) -> CheckTally:
    """G and s_i are separated by the integer i and its conjugate."""
    tally = CheckTally()
    for i in range(1, params["max_i"] + 1):
        n = integer(i)
        n_conj = conjugate(n)
        s_i = s_game(i)
        for g in _space(FILTER_ALL, min(i - 1, params["g_bound"])):
            holds = (
                _o_sum(g, n) == Outcome.R
                and outcome_geq(_o_sum(s_i, n), Outcome.N)
                and _o_sum(g, n_conj) == Outcome.L
                and outcome_geq(Outcome.N, _o_sum(s_i, n_conj))
            )
            tally.record(holds, g, "incomparable", "comparable", h=s_i, x=n)
    return tally


def check_s_ge(params: dict[str, Any]) -> CheckTally:
    """S is above every impartial binary game modulo dicot games."""
    tally = CheckTally()
    universe = UniverseSpec(FILTER_DICOT, params["dist_bound"])
    for i in range(params["max_i"] + 1):
        s_i = s_game(i)
        verdict = ge_dicot_vs_binary_db(GAME_S, s_i)
        tally.record(verdict.proved, GAME_S, "proved", verdict.status, h=s_i)
        witness = first_distinguisher(GAME_S, s_i, universe)
        tally.record(witness is None, GAME_S, "no witness", "witness", h=s_i, x=witness)
    return tally


# =============================================================================
# Binary dicot comparisons
# =============================================================================


def check_binary_ge_zero_outcome(params: dict[str, Any]) -> CheckTally:
    tally = CheckTally()
    for g in _space(FILTER_BINARY, params["binary_bound"]):
        if not ge_db_zero(g):
            tally.skip()
            continue
        got = _o(g)
        tally.record(got == Outcome.N, g, "N", got.value)
    return tally


def _reverses_through_zero(game: GameId) -> bool:
    return any(ZERO in right_options(gl) for gl in left_options(game))


def check_geq_eq(params: dict[str, Any]) -> CheckTally:
    """A binary G >= 0 with a Left option reversing through 0 is equivalent to 0."""
    tally = CheckTally()
    universe = UniverseSpec(FILTER_BINARY_DICOT, params["dist_bound"])
    for g in _space(FILTER_BINARY, params["binary_bound"]):
        if not (ge_db_zero(g) and _reverses_through_zero(g)):
            tally.skip()
            continue
        tally.record(ge_binary_db(ZERO, g), g, "0 >= G", "0 not >= G", h=ZERO)
        witness = first_distinguisher(ZERO, g, universe)
        tally.record(witness is None, g, "no witness", "witness", h=ZERO, x=witness)
    return tally


def check_z_gt_zero(params: dict[str, Any]) -> CheckTally:
    tally = CheckTally()
    universe = UniverseSpec(FILTER_BINARY_DICOT, params["dist_bound"])
    tally.record(ge_db_zero(GAME_Z), GAME_Z, "Z >= 0", "not >= 0", h=ZERO)
    tally.record(ge_binary_db(GAME_Z, ZERO), GAME_Z, "Z >= 0", "not >= 0", h=ZERO)
    tally.record(not ge_binary_db(ZERO, GAME_Z), ZERO, "0 not >= Z", "0 >= Z", h=GAME_Z)
    got = (_o_sum(ZERO, GAME_GA), _o_sum(GAME_Z, GAME_GA))
    tally.record(
        got == (Outcome.R, Outcome.L),
        GAME_Z,
        "RL",
        got[0].value + got[1].value,
        h=ZERO,
        x=GAME_GA,
    )
    witness = first_distinguisher(GAME_Z, ZERO, universe)
    tally.record(witness is None, GAME_Z, "no witness", "witness", h=ZERO, x=witness)
    return tally


def _zero_candidates(params: dict[str, Any]) -> list[GameId]:
    games = list(_space(FILTER_DICOT, params["dicot_bound"]))
    for g in _space(FILTER_BINARY, params["binary_bound"]):
        if g not in games:
            games.append(g)
    return games


def check_hi0(params: dict[str, Any]) -> CheckTally:
    """Every Right option of a G >= 0 has a Left option >= 0."""
    tally = CheckTally()
    for g in _zero_candidates(params):
        if not ge_db_zero(g):
            tally.skip()
            continue
        holds = all(
            any(ge_db_zero(grl) for grl in left_options(gr)) for gr in right_options(g)
        )
        tally.record(holds, g, "answer to every Right move", "unanswered Right move")
    return tally


def check_normal_shadow(params: dict[str, Any]) -> CheckTally:
    tally = CheckTally()
    for g in _zero_candidates(params):
        if not ge_db_zero(g):
            tally.skip()
            continue
        tally.record(ge_normal(g, ZERO), g, "G >= 0 in normal play", "not >= 0", h=ZERO)
    return tally


def _sampled_dicot_distinguishers(params: dict[str, Any]) -> tuple[GameId, ...]:
    """Seeded dicot games born by `sample_bound`, beyond the enumerated bound."""
    drawn = sample_trees(FILTER_DICOT, params["sample_bound"], params["dist_samples"], params["dist_seed"])
    return tuple(dict.fromkeys(drawn))


def _dicot_distinguisher(
    g: GameId, h: GameId, universe: UniverseSpec, sampled: tuple[GameId, ...]
) -> Optional[GameId]:
    witness = first_distinguisher(g, h, universe)
    if witness is None:
        witness = first_distinguisher_among(g, h, sampled)
    return witness


def check_b2d0(params: dict[str, Any]) -> CheckTally:
    """The zero characterisation agrees with dicot distinguisher search."""
    tally = CheckTally()
    universe = UniverseSpec(FILTER_DICOT, params["dist_bound"])
    sampled = _sampled_dicot_distinguishers(params)
    games = list(_space(FILTER_DICOT, params["g_bound"]))
    games += sample_trees(FILTER_DICOT, params["g_bound"] + 1, params["samples"], params["seed"])

    for g in games:
        if ge_db_zero(g):
            witness = _dicot_distinguisher(g, ZERO, universe, sampled)
            tally.record(witness is None, g, "no witness", "witness", h=ZERO, x=witness)
        else:
            x = zero_certificate(g)
            holds = _o(x) == Outcome.P and refutes(g, ZERO, x)
            tally.record(holds, g, "certificate refutes", "certificate fails", h=ZERO, x=x)
    return tally


def check_b2d(params: dict[str, Any]) -> CheckTally:
    """The tilde characterisation agrees with dicot distinguisher search."""
    tally = CheckTally()
    universe = UniverseSpec(FILTER_DICOT, params["dist_bound"])
    sampled = _sampled_dicot_distinguishers(params)
    for g in _space(FILTER_DICOT, params["g_bound"]):
        for h in _space(FILTER_BINARY, params["h_bound"]):
            if has_l_follower(h):
                tally.skip()
                continue
            verdict = ge_dicot_vs_binary_db(g, h)
            if verdict.proved:
                witness = _dicot_distinguisher(g, h, universe, sampled)
                tally.record(witness is None, g, "no witness", "witness", h=h, x=witness)
            else:
                x = verdict.witness
                holds = is_dicot(x) and refutes(g, h, x)
                tally.record(holds, g, "certificate refutes", "certificate fails", h=h, x=x)
    return tally


def check_b2db(params: dict[str, Any]) -> CheckTally:
    """The binary recursion agrees with dicot search, and refutations build witnesses."""
    tally = CheckTally()
    universe = UniverseSpec(FILTER_DICOT, params["dist_bound"])
    sampled = _sampled_dicot_distinguishers(params)
    games = _space(FILTER_BINARY, params["pair_bound"])
    for g in games:
        for h in games:
            if ge_binary_db(g, h):
                witness = _dicot_distinguisher(g, h, universe, sampled)
                tally.record(witness is None, g, "no witness", "witness", h=h, x=witness)
                tally.record(ge_normal(g, h), g, "G >= H in normal play", "not >=", h=h)
            else:
                x = refutation_witness_db(g, h)
                holds = is_binary(x) and is_dicot(x) and refutes(g, h, x)
                tally.record(holds, g, "witness refutes", "witness fails", h=h, x=x)
    return tally


def check_binary_order(params: dict[str, Any]) -> CheckTally:
    """Reflexivity, transitivity and outcome monotonicity of the binary recursion."""
    tally = CheckTally()
    games = _space(FILTER_BINARY_DICOT, params["bound"])
    for g in games:
        tally.record(ge_binary_db(g, g), g, "G >= G", "not reflexive", h=g)

    above = {g: [h for h in games if ge_binary_db(g, h)] for g in games}
    for g in games:
        for h in above[g]:
            tally.record(
                outcome_geq(_o(g), _o(h)), g, "o(G) >= o(H)", "outcome not monotone", h=h
            )
            for k in above[h]:
                tally.record(ge_binary_db(g, k), g, "G >= K", "not transitive", h=k)

    for g in _space(FILTER_BINARY, params["bound"]):
        tally.record(
            ge_db_zero(g) == ge_binary_db(g, ZERO), g, "characterisations agree", "disagree", h=ZERO
        )
    return tally


def check_downlink(params: dict[str, Any]) -> CheckTally:
    tally = CheckTally()
    games = _space(FILTER_BINARY, params["pair_bound"])
    for g in games:
        for h in games:
            if downlinked_db(g, h):
                try:
                    t = build_downlink_witness(g, h)
                    tally.record(True, g, "witness", "witness", h=h, x=t)
                except WitnessNotFoundError as e:
                    tally.record(False, g, "witness", str(e), h=h)
            if ge_binary_db(g, h):
                holds = not any(downlinked_db(g, hl) for hl in left_options(h)) and not any(
                    downlinked_db(gr, h) for gr in right_options(g)
                )
                tally.record(holds, g, "no downlink", "downlinked", h=h)
    return tally


def check_witness_bound(params: dict[str, Any]) -> CheckTally:
    """Smallest binary dicot distinguisher birthday for each refuted binary pair."""
    tally = CheckTally()
    games = _space(FILTER_BINARY, params["pair_bound"])
    largest_needed = 0
    for g in games:
        for h in games:
            if ge_binary_db(g, h):
                tally.skip()
                continue
            needed = next(
                (
                    bound
                    for bound in range(params["max_bound"] + 1)
                    if first_distinguisher(g, h, UniverseSpec(FILTER_BINARY_DICOT, bound))
                    is not None
                ),
                None,
            )
            if needed is None:
                tally.unresolved_instance(f"no witness born by {params['max_bound']}")
            else:
                largest_needed = max(largest_needed, needed)
                tally.record(True, g, "witness", "witness", h=h)
    tally.notes.append(f"largest witness birthday needed: {largest_needed}")
    return tally


def check_carac_preconditions(params: dict[str, Any]) -> CheckTally:
    """Each hypothesis of the tilde characterisation is needed."""
    tally = CheckTally()
    one = integer(1)
    wide = game_from_text("{{0|0,*}|0}")

    # Non-dicot G
    tally.record(
        left_wins(add(one, tilde(STAR, 1)), Mover.SECOND), one, "Left wins second", "loses", h=STAR
    )
    tally.record(refutes(one, STAR, ZERO), one, "1 not >= *", "1 >= *", h=STAR, x=ZERO)

    # Non-binary H
    got = (_o(wide), _o(tilde(wide, 0)))
    tally.record(got == (Outcome.P, Outcome.L), wide, "PL", got[0].value + got[1].value)
    tally.record(
        refutes(ZERO, wide, ZERO) and refutes(wide, ZERO, ZERO),
        ZERO, "incomparable", "comparable", h=wide, x=ZERO,
    )

    # L-outcome follower in H
    got_z = _o(tilde(GAME_Z, 0))
    tally.record(got_z == Outcome.P, GAME_Z, "P", got_z.value)
    tally.record(refutes(ZERO, GAME_Z, GAME_GA), ZERO, "0 not >= Z", "0 >= Z", h=GAME_Z, x=GAME_GA)

    for g, h, hypothesis in ((one, STAR, "dicot-g"), (ZERO, wide, "binary-h"), (ZERO, GAME_Z, "l-follower")):
        try:
            ge_dicot_vs_binary_db(g, h)
            tally.record(False, g, f"refused: {hypothesis}", "accepted", h=h)
        except PreconditionError as e:
            tally.record(e.hypothesis == hypothesis, g, f"refused: {hypothesis}", e.hypothesis, h=h)
    return tally


def check_census_binary_dicot(params: dict[str, Any]) -> CheckTally:
    tally = CheckTally()
    result = census_binary_dicot(params["bound"])
    if params["bound"] == 3:
        tally.record(
            result.trees == BINARY_DICOT_3_TREES, ZERO, str(BINARY_DICOT_3_TREES), str(result.trees)
        )
    if result.expected_classes is not None:
        tally.record(
            result.classes == result.expected_classes,
            ZERO,
            str(result.expected_classes),
            str(result.classes),
        )
    tally.notes.extend(result.notes)
    tally.notes.append(f"{result.trees} trees, {result.classes} classes")
    return tally


# =============================================================================
# Impartial games
# =============================================================================


def check_i2d(params: dict[str, Any]) -> CheckTally:
    return i_to_d_tally(
        params["pairs_bound"], params["dist_bound"], _sampled_dicot_distinguishers(params)
    )


def check_i_counterexamples(params: dict[str, Any]) -> CheckTally:
    """I and {I|I} sit above every impartial game, yet dicot games tell them apart."""
    tally = CheckTally()
    i_i = intern([GAME_I], [GAME_I])
    i_adj = adjoint(GAME_I)
    for x in _space(FILTER_IMPARTIAL, params["x_bound"]):
        for g in (GAME_I, i_i):
            got = _o_sum(g, x)
            tally.record(got == Outcome.L, g, "L", got.value, x=x)

    got = (_o_sum(GAME_I, i_adj), _o_sum(ZERO, i_adj))
    tally.record(got == (Outcome.P, Outcome.L), GAME_I, "PL", got[0].value + got[1].value, h=ZERO, x=i_adj)
    got = (_o_sum(GAME_I, i_adj), _o_sum(i_i, i_adj))
    tally.record(got == (Outcome.P, Outcome.N), GAME_I, "PN", got[0].value + got[1].value, h=i_i, x=i_adj)
    return tally


def check_di_ext(params: dict[str, Any]) -> CheckTally:
    """n copies of {|I} win for Left against any impartial game."""
    tally = CheckTally()
    right_i = intern([], [GAME_I])
    for n in range(1, params["max_n"] + 1):
        copies = sum_all([right_i] * n)
        for x in _space(FILTER_IMPARTIAL, params["x_bound"]):
            got = _o_sum(x, copies)
            tally.record(got == Outcome.L, x, "L", got.value, x=copies)
    return tally


def check_canonical_impartial(params: dict[str, Any]) -> CheckTally:
    """Idempotence, class counts and soundness of impartial canonical forms."""
    tally = CheckTally()
    bound = params["bound"]
    games = _space(FILTER_IMPARTIAL, bound)
    universe = UniverseSpec(FILTER_IMPARTIAL, params["dist_bound"])

    for g in games:
        c = canonical_impartial(g)
        tally.record(canonical_impartial(c) == c, g, "idempotent", "not idempotent", h=c)

    classes = len({canonical_impartial(g) for g in games})
    if bound in KNOWN_IMPARTIAL_CLASSES:
        expected = KNOWN_IMPARTIAL_CLASSES[bound]
        tally.record(classes == expected, ZERO, str(expected), str(classes))

    for g in games:
        for h in games:
            witness = first_distinguisher(g, h, universe)
            if equivalent_impartial(g, h):
                tally.record(witness is None, g, "no witness", "witness", h=h, x=witness)
            elif witness is None:
                tally.unresolved_instance(f"no impartial distinguisher born by {params['dist_bound']}")
            else:
                tally.record(True, g, "witness", "witness", h=h, x=witness)
    return tally


# =============================================================================
# Registry
# =============================================================================


@dataclass(frozen=True)
class TheoremCheck:
    """A registered check: anchor statement, default parameters, check function."""

    id: str
    anchor: str
    runner: Callable[[dict[str, Any]], CheckTally]
    defaults: dict[str, Any] = field(default_factory=dict)


THEOREM_CHECKS: dict[str, TheoremCheck] = {
    check.id: check
    for check in [
        TheoremCheck(
            "outcomes",
            "Theorem IL, Proposition Z>0: outcomes of the named games",
            check_outcomes,
            {"x_bound": 3},
        ),
        TheoremCheck(
            "il",
            "Theorem IL: I + X is an L-position for every impartial X",
            check_il,
            {"x_bound": 3},
        ),
        TheoremCheck(
            "ggir",
            "Theorem GGiR: G + B_i is an R-position when i >= b(G)",
            check_ggir,
            {"g_bound": 2, "i": 2},
        ),
        TheoremCheck(
            "ggir-corollary",
            "Theorem GGiR, corollary: conj(B_i) and {conj(B_i)|B_i} force L and N when i >= b(G)",
            check_ggir_corollary,
            {"g_bound": 2, "i": 2},
        ),
        TheoremCheck(
            "adjoint-sum",
            "Proposition adjointsum: G + G^o is a P-position",
            check_adjoint_sum,
            {"g_bound": 2},
        ),
        TheoremCheck(
            "companions",
            "Proposition adjointsum, corollary: companions force outcomes P, N, L and R",
            check_companions,
            {"g_bound": 2},
        ),
        TheoremCheck(
            "adjoint-dicot",
            "Adjoints are dicot, and binary dicot for binary games",
            check_adjoint_dicot,
            {"g_bound": 2, "binary_bound": 3},
        ),
        TheoremCheck(
            "adjout",
            "Lemma adjout: the outcome of a binary adjoint is fixed by the outcome",
            check_adjout,
            {"binary_bound": 3},
        ),
        TheoremCheck(
            "adjiout",
            "Lemma adjiout: the outcome of a binary tilde game is fixed by the outcome",
            check_adjiout,
            {"binary_bound": 3},
        ),
        TheoremCheck(
            "tilde-sum",
            "Lemma adjiout, corollary: G + tilde(G, b(G)) is a P-position for binary G",
            check_tilde_sum,
            {"binary_bound": 3},
        ),
        TheoremCheck(
            "adjoint-incomparable",
            "G and (G^o)^o + * are incomparable",
            check_adjoint_incomparable,
            {"g_bound": 2},
        ),
        TheoremCheck(
            "s-incomparable",
            "G and s_i are incomparable when i > b(G)",
            check_s_incomparable,
            {"max_i": 4, "g_bound": 2},
        ),
        TheoremCheck(
            "s-ge",
            "S is above every impartial binary game modulo dicots",
            check_s_ge,
            {"max_i": 6, "dist_bound": 2},
        ),
        TheoremCheck(
            "binary-ge-zero-outcome",
            "A binary game >= 0 modulo binary dicots has outcome N",
            check_binary_ge_zero_outcome,
            {"binary_bound": 3},
        ),
        TheoremCheck(
            "geq-eq",
            "Corollary geq->eq: a binary G >= 0 with a Left option reversing through 0 is equivalent to 0",
            check_geq_eq,
            {"binary_bound": 3, "dist_bound": 2},
        ),
        TheoremCheck(
            "z-gt-zero",
            "Proposition Z>0: Z is strictly above 0 modulo binary dicots",
            check_z_gt_zero,
            {"dist_bound": 2},
        ),
        TheoremCheck(
            "hi0",
            "Corollary HI0: every Right option of a game >= 0 has a Left option >= 0",
            check_hi0,
            {"dicot_bound": 2, "binary_bound": 3},
        ),
        TheoremCheck(
            "normal-shadow",
            "Lemma carac0, consequence: a game >= 0 modulo binary dicots is >= 0 in normal play",
            check_normal_shadow,
            {"dicot_bound": 2, "binary_bound": 3},
        ),
        TheoremCheck(
            "b2d0",
            "Theorem B=>D0: G >= 0 modulo binary dicots iff modulo dicots",
            check_b2d0,
            {
                "g_bound": 2,
                "dist_bound": 2,
                "samples": 200,
                "seed": 20,
                "sample_bound": 3,
                "dist_samples": 100,
                "dist_seed": 21,
            },
        ),
        TheoremCheck(
            "b2d",
            "Theorem B=>D: dicot G >= binary H without L followers, binary dicots decide",
            check_b2d,
            {"g_bound": 2, "h_bound": 2, "dist_bound": 2, "sample_bound": 3, "dist_samples": 100, "dist_seed": 21},
        ),
        TheoremCheck(
            "b2db",
            "Theorem B=>Db: binary G >= binary H modulo binary dicots iff modulo dicots",
            check_b2db,
            {"pair_bound": 2, "dist_bound": 2, "sample_bound": 3, "dist_samples": 100, "dist_seed": 21},
        ),
        TheoremCheck(
            "binary-order",
            "Lemma binrec: the binary recursion is a preorder compatible with outcomes",
            check_binary_order,
            {"bound": 3},
        ),
        TheoremCheck("downlink", "Downlinked pairs have separating games", check_downlink, {"pair_bound": 2}),
        TheoremCheck(
            "witness-bound",
            "Refuted binary pairs have small binary dicot distinguishers",
            check_witness_bound,
            {"pair_bound": 2, "max_bound": 4},
        ),
        TheoremCheck(
            "carac-preconditions",
            "Lemma carac: each hypothesis of the tilde characterisation is necessary",
            check_carac_preconditions,
        ),
        TheoremCheck(
            "census-binary-dicot",
            "The 26 binary dicot trees born by day 3 form 13 classes",
            check_census_binary_dicot,
            {"bound": 3},
        ),
        TheoremCheck(
            "i2d",
            I_TO_D_ANCHOR,
            check_i2d,
            {"pairs_bound": 3, "dist_bound": 2, "sample_bound": 3, "dist_samples": 100, "dist_seed": 21},
        ),
        TheoremCheck(
            "i-counterexamples",
            "Theorem I=>D, limits: I >= 0 and I = {I|I} modulo impartials, but not modulo dicots",
            check_i_counterexamples,
            {"x_bound": 3},
        ),
        TheoremCheck(
            "di-ext",
            "Theorem IL, extension: X + n{|I} is an L-position for impartial X",
            check_di_ext,
            {"x_bound": 3, "max_n": 2},
        ),
        TheoremCheck(
            "canonical-impartial",
            "Theorem revsimp: impartial canonical forms are idempotent and sound",
            check_canonical_impartial,
            {"bound": 3, "dist_bound": 3},
        ),
    ]
}
