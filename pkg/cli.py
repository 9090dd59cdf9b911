"""
Misère Workbench command-line interface.

Subcommands compute outcomes, compare games modulo a universe, build
constructions, enumerate spaces, run censuses and verify the registered
theorem checks. Exit codes: 0 on success, 1 when a verification check
fails, 2 on input errors.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Optional

from src.census.classify import approximate_dicot_census, census_binary_dicot
from src.census.enumerate import (
    ResourceCeilingError,
    describe_size,
    enumerate_space,
    set_enumeration_ceiling,
)
from src.comparison.dispatch import compare
from src.comparison.universe import UniverseSpec, verdict_to_dict
from src.config.parser import ConfigParseError, load_config_file
from src.config.schema import RunConfig, parse_override_pairs
from src.config.validator import format_validation_errors, validate_run_config
from src.constants import (
    APP_NAME,
    APP_VERSION,
    DEFAULT_COMPARE_BOUND,
    DEFAULT_DICOT_DISTINGUISHER_BOUND,
    DEFAULT_SAMPLE_SEED,
    FILTER_DICOT,
    MAX_ENUMERATION_SIZE,
    PRINT_STYLE_BRACES,
    PRINT_STYLES,
    STATUS_FAIL,
    UNIVERSE_FILTERS,
)
from src.file_handling.export import reports_to_csv, reports_to_json
from src.games.constructions import adjoint, tilde
from src.games.core import GameId, birthday
from src.games.notation import GameSyntaxError, game_from_text, print_game
from src.games.solver import Convention, outcome
from src.harness.runner import UnknownCheckError, run_all
from src.impartial.canonical import canonical_impartial
from src.reporting.html_report import generate_html_report
from src.reporting.summary import format_census_result, format_run_summary

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT_ERROR = 2

CENSUS_BINARY_DICOT_3 = "binary-dicot-3"
CENSUS_DICOT_3 = "dicot3"


class InputError(Exception):
    """Bad user input; reported on stderr with exit code 2."""

    pass


def _game(text: str) -> GameId:
    try:
        return game_from_text(text)
    except GameSyntaxError as e:
        raise InputError(f"Cannot parse '{text}': {e}") from e


def _print_json(data: object) -> None:
    print(json.dumps(data, sort_keys=True, ensure_ascii=False))


# =============================================================================
# Subcommands
# =============================================================================


def cmd_outcome(args: argparse.Namespace) -> int:
    game = _game(args.game)
    convention = Convention.NORMAL if args.normal else Convention.MISERE
    print(outcome(game, convention).value)
    return EXIT_OK


def cmd_compare(args: argparse.Namespace) -> int:
    g = _game(args.g)
    h = _game(args.h)
    try:
        universe = UniverseSpec(args.universe, args.bound)
    except ValueError as e:
        raise InputError(str(e)) from e

    verdict = compare(g, h, universe)
    if args.json:
        _print_json(verdict_to_dict(verdict))
    elif verdict.proved:
        print(f"proved ({verdict.method})")
    elif verdict.refuted:
        witness = print_game(verdict.witness, args.style) if verdict.witness is not None else "none found"
        print(f"refuted ({verdict.method}); witness: {witness}")
    else:
        print(f"unknown: no distinguisher born by {verdict.bound} ({verdict.method})")
    return EXIT_OK


def cmd_canonical(args: argparse.Namespace) -> int:
    game = _game(args.game)
    try:
        print(print_game(canonical_impartial(game), args.style))
    except ValueError as e:
        raise InputError(str(e)) from e
    return EXIT_OK


def cmd_adjoint(args: argparse.Namespace) -> int:
    print(print_game(adjoint(_game(args.game)), args.style))
    return EXIT_OK


def cmd_tilde(args: argparse.Namespace) -> int:
    game = _game(args.game)
    index = birthday(game) if args.i is None else args.i
    print(print_game(tilde(game, index), args.style))
    return EXIT_OK


def cmd_print(args: argparse.Namespace) -> int:
    print(print_game(_game(args.game), args.style))
    return EXIT_OK


def cmd_enumerate(args: argparse.Namespace) -> int:
    if args.count:
        # Counting does not need the trees once the level sizes are known
        print(describe_size(args.filter, args.birthday))
        return EXIT_OK

    space = enumerate_space(args.filter, args.birthday)
    for game in space:
        print(print_game(game, args.style))
    return EXIT_OK


def cmd_census(args: argparse.Namespace) -> int:
    if args.name == CENSUS_BINARY_DICOT_3:
        result = census_binary_dicot(3)
    elif args.approx:
        if args.samples is not None and args.samples <= 0:
            raise InputError(f"--samples must be positive, got {args.samples}")
        try:
            result = approximate_dicot_census(3, args.dist_bound, samples=args.samples, seed=args.seed)
        except ResourceCeilingError as e:
            raise InputError(
                f"{e}. Raise --max-enumeration-size to at least {describe_size(FILTER_DICOT, 3)} "
                "or classify a sample with --samples N"
            ) from e
    else:
        raise InputError(
            "The exact dicot census needs the general dicot comparison, which is "
            "not available; run 'census dicot3 --approx' for the bounded lower bound"
        )

    if args.json:
        _print_json(
            {
                "census": result.name,
                "trees": result.trees,
                "classes": result.classes,
                "expected_classes": result.expected_classes,
                "minimal_members": result.minimal_members,
                "flagged": result.flagged,
                "notes": result.notes,
            }
        )
    else:
        print(format_census_result(result))
    return EXIT_OK


def _verify_config(args: argparse.Namespace) -> RunConfig:
    config = RunConfig()
    if args.config:
        try:
            config = load_config_file(args.config)
        except ConfigParseError as e:
            raise InputError(str(e)) from e

    ids = [part for item in args.ids for part in item.split(",") if part]
    if args.only:
        ids += [part for part in args.only.split(",") if part]
    if ids and ids != ["all"]:
        config.checks = ids

    if args.workers is not None:
        config.workers = args.workers
    if args.max_enumeration_size is not None:
        config.max_enumeration_size = args.max_enumeration_size

    if args.bound_overrides:
        try:
            global_overrides, per_check = parse_override_pairs(args.bound_overrides)
        except ValueError as e:
            raise InputError(str(e)) from e
        config.global_overrides.update(global_overrides)
        for check_id, params in per_check.items():
            config.bounds.setdefault(check_id, {}).update(params)

    validation = validate_run_config(config)
    if not validation.is_valid:
        raise InputError(format_validation_errors(validation))
    return config


def cmd_verify(args: argparse.Namespace) -> int:
    config = _verify_config(args)
    try:
        reports = run_all(config)
    except UnknownCheckError as e:
        raise InputError(f"Unknown check: {e}") from e

    if args.json:
        sys.stdout.write(reports_to_json(reports))
    else:
        print(format_run_summary(reports))

    if args.html:
        Path(args.html).write_text(generate_html_report(reports), encoding="utf-8")
        logger.info("Wrote HTML report to %s", args.html)
    if args.csv:
        Path(args.csv).write_bytes(reports_to_csv(reports))
        logger.info("Wrote CSV report to %s", args.csv)

    if any(report.status == STATUS_FAIL for report in reports):
        return EXIT_FAILED
    return EXIT_OK


# =============================================================================
# Parser
# =============================================================================


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="misere",
        description=f"{APP_NAME}: exact misère game computations and theorem checks.",
    )
    parser.add_argument("--version", action="version", version=f"{APP_NAME} {APP_VERSION}")
    parser.add_argument(
        "-v", "--verbose", action="count", default=0, help="-v for progress, -vv for debug output"
    )
    parser.add_argument(
        "--max-enumeration-size",
        type=int,
        default=None,
        help=f"largest space any enumeration may build (default {MAX_ENUMERATION_SIZE})",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def with_style(p: argparse.ArgumentParser) -> argparse.ArgumentParser:
        p.add_argument("--style", choices=PRINT_STYLES, default=PRINT_STYLE_BRACES)
        return p

    p = sub.add_parser("outcome", help="outcome class of a game")
    p.add_argument("game")
    p.add_argument("--normal", action="store_true", help="use normal play instead of misère")
    p.set_defaults(func=cmd_outcome)

    p = with_style(sub.add_parser("compare", help="decide G >= H modulo a universe"))
    p.add_argument("g")
    p.add_argument("h")
    p.add_argument("--universe", choices=UNIVERSE_FILTERS, default=FILTER_DICOT)
    p.add_argument("--bound", type=int, default=DEFAULT_COMPARE_BOUND, help="distinguisher birthday bound")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_compare)

    p = with_style(sub.add_parser("canonical", help="canonical form of an impartial game"))
    p.add_argument("game")
    p.add_argument("--impartial", action="store_true", help="accepted for clarity; impartial is the only mode")
    p.set_defaults(func=cmd_canonical)

    p = with_style(sub.add_parser("adjoint", help="the adjoint G^o"))
    p.add_argument("game")
    p.set_defaults(func=cmd_adjoint)

    p = with_style(sub.add_parser("tilde", help="the tilde game of G at index i"))
    p.add_argument("game")
    p.add_argument("--i", type=int, default=None, help="index, defaults to the birthday of G")
    p.set_defaults(func=cmd_tilde)

    p = with_style(sub.add_parser("print", help="reprint an expression"))
    p.add_argument("game")
    p.set_defaults(func=cmd_print)

    p = with_style(sub.add_parser("enumerate", help="list or count trees born by a bound"))
    p.add_argument("--filter", choices=UNIVERSE_FILTERS, default="all")
    p.add_argument("--birthday", type=int, required=True)
    p.add_argument("--count", action="store_true", help="print only the number of trees")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("census", help="equivalence class counts")
    p.add_argument("name", choices=[CENSUS_BINARY_DICOT_3, CENSUS_DICOT_3])
    p.add_argument("--approx", action="store_true", help="bounded-distinguisher lower bound (dicot3 only)")
    p.add_argument("--samples", type=int, default=None, help="classify this many sampled day-3 trees (dicot3 only)")
    p.add_argument("--seed", type=int, default=DEFAULT_SAMPLE_SEED)
    p.add_argument("--dist-bound", type=int, default=DEFAULT_DICOT_DISTINGUISHER_BOUND)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("verify", help="run theorem checks")
    p.add_argument("ids", nargs="*", default=[], help="check ids, or 'all'")
    p.add_argument("--only", default=None, help="comma-separated check ids")
    p.add_argument("--json", action="store_true", help="one JSON object per report")
    p.add_argument("--bound-overrides", default=None, help="k=v,id.k=v parameter overrides")
    p.add_argument("--config", default=None, help="YAML run configuration")
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--html", default=None, help="also write an HTML report to this path")
    p.add_argument("--csv", default=None, help="also write a CSV summary to this path")
    p.set_defaults(func=cmd_verify)

    return parser


def _configure_logging(verbosity: int) -> None:
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _configure_logging(args.verbose)

    try:
        if args.max_enumeration_size is not None:
            set_enumeration_ceiling(args.max_enumeration_size)
        return args.func(args)
    except (InputError, ResourceCeilingError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
    except RecursionError:
        print("error: expression is nested too deeply to evaluate", file=sys.stderr)
    return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
