"""
Check runner.

This module runs registered theorem checks with merged parameters and
collects their reports in registry order.
"""

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Optional

from src.census.enumerate import set_enumeration_ceiling
from src.config.schema import RunConfig
from src.harness.checks import THEOREM_CHECKS
from src.harness.results import Report

logger = logging.getLogger(__name__)


class UnknownCheckError(KeyError):
    """Raised for a check id that is not registered."""

    pass


def resolve_params(check_id: str, overrides: Optional[dict[str, Any]] = None) -> dict[str, Any]:
    """
    Merge a check's default parameters with overrides.

    Args:
        check_id: Registered check id
        overrides: Parameter values to apply; keys the check does not
            declare are ignored

    Returns:
        Parameter dict
    """
    if check_id not in THEOREM_CHECKS:
        raise UnknownCheckError(check_id)
    params = dict(THEOREM_CHECKS[check_id].defaults)
    for key, value in (overrides or {}).items():
        if key in params:
            params[key] = value
    return params


def run_check(check_id: str, params: Optional[dict[str, Any]] = None) -> Report:
    """
    Run one registered check.

    Args:
        check_id: Registered check id
        params: Parameter overrides

    Returns:
        Report with anchor, merged params and elapsed time

    Raises:
        UnknownCheckError: If the id is not registered
    """
    if check_id not in THEOREM_CHECKS:
        raise UnknownCheckError(check_id)
    check = THEOREM_CHECKS[check_id]
    merged = resolve_params(check_id, params)

    logger.info("Running check %s with %s", check_id, merged)
    start = time.perf_counter()
    tally = check.runner(merged)
    elapsed = int((time.perf_counter() - start) * 1000)
    report = tally.to_report(check_id, check.anchor, merged, elapsed)
    logger.info("Check %s: %s (%d instances)", check_id, report.status, report.instances_checked)
    return report


def selected_checks(config: RunConfig) -> list[str]:
    """Check ids to run, in registry order."""
    if not config.checks:
        return list(THEOREM_CHECKS)
    unknown = [c for c in config.checks if c not in THEOREM_CHECKS]
    if unknown:
        raise UnknownCheckError(", ".join(unknown))
    return [c for c in THEOREM_CHECKS if c in config.checks]


def params_for(check_id: str, config: RunConfig) -> dict[str, Any]:
    """The run seed, then global overrides, then the check's own overrides."""
    overrides: dict[str, Any] = {"seed": config.seed}
    overrides.update(config.global_overrides)
    overrides.update(config.bounds.get(check_id, {}))
    return overrides


def run_all(config: Optional[RunConfig] = None) -> list[Report]:
    """
    Run every selected check.

    Args:
        config: Run configuration; defaults run the full registry

    Returns:
        Reports in registry order
    """
    config = config or RunConfig()
    check_ids = selected_checks(config)
    set_enumeration_ceiling(config.max_enumeration_size)

    if config.workers <= 1:
        return [run_check(c, params_for(c, config)) for c in check_ids]

    with ThreadPoolExecutor(max_workers=config.workers) as pool:
        return list(pool.map(lambda c: run_check(c, params_for(c, config)), check_ids))
