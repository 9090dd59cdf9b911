"""
Run configuration self-validation.

This module validates run configurations before any check is started.
"""

from dataclasses import dataclass

from src.config.schema import RunConfig
from src.harness.checks import THEOREM_CHECKS


@dataclass
class ValidationError:
    """A single validation error."""

    field: str
    message: str
    guidance: str


@dataclass
class ConfigValidationResult:
    """Result of configuration validation."""

    is_valid: bool
    errors: list[ValidationError]


def validate_run_config(config: RunConfig) -> ConfigValidationResult:
    """
    Validate a run configuration.

    Args:
        config: The RunConfig to validate

    Returns:
        ConfigValidationResult with validation status and any errors
    """
    errors = []
    errors.extend(_validate_run_settings(config))
    errors.extend(_validate_overrides(config))

    return ConfigValidationResult(
        is_valid=len(errors) == 0,
        errors=errors,
    )


def _is_count(value: object) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def _validate_run_settings(config: RunConfig) -> list[ValidationError]:
    errors = []

    for check_id in config.checks:
        if check_id not in THEOREM_CHECKS:
            errors.append(
                ValidationError(
                    field="run.checks",
                    message=f"Unknown check '{check_id}'.",
                    guidance=f"Use one of: {', '.join(THEOREM_CHECKS)}.",
                )
            )

    if not _is_count(config.workers) or config.workers < 1:
        errors.append(
            ValidationError(
                field="run.workers",
                message="Workers must be a positive integer.",
                guidance="Set 'workers: 1' to run checks sequentially.",
            )
        )

    if not _is_count(config.seed):
        errors.append(
            ValidationError(
                field="run.seed",
                message="Seed must be an integer.",
                guidance="Any integer works; the same seed gives the same samples.",
            )
        )

    if not _is_count(config.max_enumeration_size) or config.max_enumeration_size <= 0:
        errors.append(
            ValidationError(
                field="limits.max_enumeration_size",
                message="The enumeration ceiling must be a positive integer.",
                guidance="The default is 100000 trees.",
            )
        )

    return errors


def _validate_overrides(config: RunConfig) -> list[ValidationError]:
    errors = []

    for key, value in config.global_overrides.items():
        if not _is_count(value) or value < 0:
            errors.append(
                ValidationError(
                    field=f"overrides.{key}",
                    message="Override values must be non-negative integers.",
                    guidance="Bounds are birthdays, counts or indices.",
                )
            )

    for check_id, params in config.bounds.items():
        if check_id not in THEOREM_CHECKS:
            errors.append(
                ValidationError(
                    field=f"bounds.{check_id}",
                    message=f"Unknown check '{check_id}'.",
                    guidance=f"Use one of: {', '.join(THEOREM_CHECKS)}.",
                )
            )
            continue
        declared = THEOREM_CHECKS[check_id].defaults
        for key, value in params.items():
            if key not in declared:
                errors.append(
                    ValidationError(
                        field=f"bounds.{check_id}.{key}",
                        message=f"Check '{check_id}' has no parameter '{key}'.",
                        guidance=f"Parameters: {', '.join(declared) or 'none'}.",
                    )
                )
            elif not _is_count(value) or value < 0:
                errors.append(
                    ValidationError(
                        field=f"bounds.{check_id}.{key}",
                        message="Bounds must be non-negative integers.",
                        guidance="Bounds are birthdays, counts or indices.",
                    )
                )

    return errors


def format_validation_errors(result: ConfigValidationResult) -> str:
    """
    Format validation errors for display.

    Args:
        result: The validation result

    Returns:
        Formatted error message string
    """
    if result.is_valid:
        return "Configuration is valid."

    lines = ["Configuration validation failed:"]
    for error in result.errors:
        lines.append(f"\n- {error.field}: {error.message}")
        lines.append(f"  Guidance: {error.guidance}")

    return "\n".join(lines)
