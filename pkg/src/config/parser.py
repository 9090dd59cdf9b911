"""
YAML run configuration parsing.

This module handles loading and serializing YAML run configurations.
"""

from typing import Optional

import yaml

from src.config.schema import RunConfig, dict_to_run_config, run_config_to_dict


class ConfigParseError(Exception):
    """Exception raised when configuration parsing fails."""

    pass


def parse_yaml_config(yaml_content: str) -> tuple[Optional[RunConfig], Optional[str]]:
    """
    Parse a YAML string into a RunConfig.

    Args:
        yaml_content: YAML content as string

    Returns:
        Tuple of (RunConfig, error_message). If successful, error_message is None.
        If failed, RunConfig is None.
    """
    try:
        data = yaml.safe_load(yaml_content)

        if data is None:
            return None, "YAML file is empty."

        if not isinstance(data, dict):
            return None, "YAML root must be a mapping (dictionary)."

        return dict_to_run_config(data), None

    except yaml.YAMLError as e:
        return None, f"Invalid YAML syntax: {str(e)}"
    except (AttributeError, TypeError, ValueError) as e:
        return None, f"Error parsing configuration: {str(e)}"


def load_config_file(path: str) -> RunConfig:
    """
    Load a configuration file, raising on any problem.

    Args:
        path: Path to a YAML file

    Returns:
        RunConfig

    Raises:
        ConfigParseError: If the file cannot be read or parsed
    """
    try:
        with open(path, "rb") as handle:
            content = handle.read().decode("utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise ConfigParseError(f"Cannot read configuration '{path}': {e}") from e

    config, error = parse_yaml_config(content)
    if config is None:
        raise ConfigParseError(error)
    return config


def serialize_config_to_yaml(config: RunConfig) -> str:
    """
    Serialize a RunConfig to a YAML string.

    Args:
        config: The RunConfig to serialize

    Returns:
        YAML string representation
    """
    return yaml.dump(
        run_config_to_dict(config),
        default_flow_style=False,
        allow_unicode=True,
        sort_keys=False,
        width=120,
    )
