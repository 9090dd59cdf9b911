"""Tests for run configuration parsing and validation."""

import pytest

from src.config.parser import (
    ConfigParseError,
    load_config_file,
    parse_yaml_config,
    serialize_config_to_yaml,
)
from src.config.schema import RunConfig, parse_override_pairs
from src.config.validator import format_validation_errors, validate_run_config
from src.constants import DEFAULT_SAMPLE_SEED, MAX_ENUMERATION_SIZE

SAMPLE_YAML = """
config_version: "1.0"
run:
  checks: [outcomes, ggir]
  workers: 2
  seed: 7
limits:
  max_enumeration_size: 5000
overrides:
  g_bound: 1
bounds:
  ggir:
    i: 3
"""


class TestParse:
    def test_full_document(self):
        config, error = parse_yaml_config(SAMPLE_YAML)
        assert error is None
        assert config.checks == ["outcomes", "ggir"]
        assert config.workers == 2
        assert config.seed == 7
        assert config.max_enumeration_size == 5000
        assert config.global_overrides == {"g_bound": 1}
        assert config.bounds == {"ggir": {"i": 3}}

    def test_defaults(self):
        config, error = parse_yaml_config("run: {}")
        assert error is None
        assert config.checks == []
        assert config.workers == 1
        assert config.seed == DEFAULT_SAMPLE_SEED
        assert config.max_enumeration_size == MAX_ENUMERATION_SIZE

    def test_checks_as_comma_string(self):
        config, _ = parse_yaml_config("run:\n  checks: outcomes, il\n")
        assert config.checks == ["outcomes", "il"]

    @pytest.mark.parametrize("text", ["", "- a\n- b\n", "run: [unclosed"])
    def test_errors_are_returned(self, text):
        config, error = parse_yaml_config(text)
        assert config is None
        assert error

    def test_round_trip(self):
        config, _ = parse_yaml_config(SAMPLE_YAML)
        again, error = parse_yaml_config(serialize_config_to_yaml(config))
        assert error is None
        assert again == config

    def test_load_file(self, tmp_path):
        path = tmp_path / "run.yaml"
        path.write_text(SAMPLE_YAML, encoding="utf-8")
        assert load_config_file(str(path)).workers == 2

        with pytest.raises(ConfigParseError):
            load_config_file(str(tmp_path / "missing.yaml"))

        empty = tmp_path / "empty.yaml"
        empty.write_text("", encoding="utf-8")
        with pytest.raises(ConfigParseError):
            load_config_file(str(empty))


class TestOverridePairs:
    def test_global_and_per_check(self):
        assert parse_override_pairs("g_bound=1, ggir.i=3") == (
            {"g_bound": 1},
            {"ggir": {"i": 3}},
        )

    def test_empty_items_ignored(self):
        assert parse_override_pairs(",x_bound=2,") == ({"x_bound": 2}, {})

    @pytest.mark.parametrize("text", ["g_bound", "g_bound=two"])
    def test_errors(self, text):
        with pytest.raises(ValueError):
            parse_override_pairs(text)


class TestValidate:
    def test_default_config_is_valid(self):
        result = validate_run_config(RunConfig())
        assert result.is_valid
        assert format_validation_errors(result) == "Configuration is valid."

    def test_sample_is_valid(self):
        config, _ = parse_yaml_config(SAMPLE_YAML)
        assert validate_run_config(config).is_valid

    @pytest.mark.parametrize(
        "config, field",
        [
            (RunConfig(checks=["nope"]), "run.checks"),
            (RunConfig(workers=0), "run.workers"),
            (RunConfig(workers=True), "run.workers"),
            (RunConfig(seed="x"), "run.seed"),
            (RunConfig(max_enumeration_size=0), "limits.max_enumeration_size"),
            (RunConfig(global_overrides={"g_bound": -1}), "overrides.g_bound"),
            (RunConfig(bounds={"nope": {}}), "bounds.nope"),
            (RunConfig(bounds={"ggir": {"depth": 1}}), "bounds.ggir.depth"),
            (RunConfig(bounds={"ggir": {"i": "3"}}), "bounds.ggir.i"),
        ],
    )
    def test_invalid(self, config, field):
        result = validate_run_config(config)
        assert not result.is_valid
        assert [e.field for e in result.errors] == [field]
        assert field in format_validation_errors(result)
