"""
Run configuration schema.

This module defines the dataclasses for a verification run configuration
and their conversion to and from plain dictionaries.
"""

from dataclasses import dataclass, field
from typing import Any

from src.constants import CONFIG_VERSION, DEFAULT_SAMPLE_SEED, MAX_ENUMERATION_SIZE


@dataclass
class RunConfig:
    """Which checks to run, with what bounds and resources."""

    config_version: str = CONFIG_VERSION
    checks: list[str] = field(default_factory=list)  # empty = all
    workers: int = 1
    seed: int = DEFAULT_SAMPLE_SEED
    max_enumeration_size: int = MAX_ENUMERATION_SIZE
    bounds: dict[str, dict[str, Any]] = field(default_factory=dict)
    global_overrides: dict[str, Any] = field(default_factory=dict)


def run_config_to_dict(config: RunConfig) -> dict:
    """
    Convert a RunConfig to the nested dictionary layout used in YAML.

    Args:
        config: The RunConfig to convert

    Returns:
        Dictionary representation
    """
    result: dict[str, Any] = {
        "config_version": config.config_version,
        "run": {
            "checks": list(config.checks),
            "workers": config.workers,
            "seed": config.seed,
        },
        "limits": {"max_enumeration_size": config.max_enumeration_size},
    }
    if config.global_overrides:
        result["overrides"] = dict(config.global_overrides)
    if config.bounds:
        result["bounds"] = {k: dict(v) for k, v in config.bounds.items()}
    return result


def dict_to_run_config(data: dict) -> RunConfig:
    """
    Convert a dictionary (from YAML) to a RunConfig.

    Args:
        data: Dictionary from YAML parsing

    Returns:
        RunConfig object
    """
    # Parse run settings
    run_data = data.get("run") or {}
    checks = run_data.get("checks") or []
    if isinstance(checks, str):
        checks = [c.strip() for c in checks.split(",") if c.strip()]

    # Parse limits
    limits_data = data.get("limits") or {}

    config = RunConfig(
        config_version=str(data.get("config_version", CONFIG_VERSION)),
        checks=list(checks),
        workers=run_data.get("workers", 1),
        max_enumeration_size=limits_data.get("max_enumeration_size", MAX_ENUMERATION_SIZE),
        global_overrides=dict(data.get("overrides") or {}),
        bounds={k: dict(v or {}) for k, v in (data.get("bounds") or {}).items()},
    )
    if "seed" in run_data:
        config.seed = run_data["seed"]
    return config


def parse_override_pairs(text: str) -> tuple[dict[str, Any], dict[str, dict[str, Any]]]:
    """
    Parse "k=v,id.k=v" override text.

    Args:
        text: Comma-separated assignments; a dotted key targets one check

    Returns:
        Tuple of (global overrides, per-check overrides)

    Raises:
        ValueError: For an assignment without "=" or a non-integer value
    """
    global_overrides: dict[str, Any] = {}
    per_check: dict[str, dict[str, Any]] = {}
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        if "=" not in item:
            raise ValueError(f"Override '{item}' must have the form key=value")
        key, raw_value = (part.strip() for part in item.split("=", 1))
        try:
            value = int(raw_value)
        except ValueError:
            raise ValueError(f"Override '{item}' must have an integer value") from None
        if "." in key:
            check_id, param = key.rsplit(".", 1)
            per_check.setdefault(check_id, {})[param] = value
        else:
            global_overrides[key] = value
    return global_overrides, per_check
