"""Tests for the ConfigManager configuration management module."""

import json
from unittest.mock import patch

import pytest

import weyl_gradings.config as config_module
from weyl_gradings.config import ConfigManager, WorkbenchSettings, configure, get_settings
from weyl_gradings.exceptions import ConfigurationError


# ── Sample Data ──────────────────────────────────────────────────────

SAMPLE_FILE = {
    "weyl": {"jobs": 4, "z33_mode": "sampled:200"},
    "bounds": {"closure_elements": "5000"},
}


# ── Fixtures ─────────────────────────────────────────────────────────


@pytest.fixture
def manager():
    """ConfigManager with defaults only."""
    return ConfigManager()


@pytest.fixture
def config_file(tmp_path):
    """A JSON configuration file with a few overrides."""
    path = tmp_path / "config.json"
    path.write_text(json.dumps(SAMPLE_FILE))
    return path


# ── Defaults ─────────────────────────────────────────────────────────


class TestDefaults:
    """Built-in defaults of every section."""

    def test_bounds(self, manager):
        bounds = manager.get_settings().bounds
        assert bounds.automorphism_group_order == 243
        assert bounds.bicharacter_group_order == 256
        assert bounds.pauli_degree == 12
        assert bounds.matrix_degree == 8
        assert bounds.closure_elements == 1_000_000
        assert bounds.upper_bound_candidates == 2_000_000

    def test_weyl(self, manager):
        weyl = manager.get_settings().weyl
        assert weyl.z33_mode == "full"
        assert weyl.z25_exhaustive is False
        assert weyl.jobs == 1
        assert weyl.sample_seed == 1729

    def test_algebras_logging_workspace(self, manager):
        settings = manager.get_settings()
        assert settings.algebras.composition_samples == 50
        assert settings.logging.level == "INFO"
        assert settings.workspace.directory == "weyl_workspace"

    def test_matches_model_defaults(self, manager):
        assert manager.get_settings() == WorkbenchSettings()


# ── JSON file layer ──────────────────────────────────────────────────


class TestConfigFile:
    """Overrides read from a JSON file."""

    def test_file_values_override_defaults(self, config_file):
        settings = ConfigManager(config_file).get_settings()
        assert settings.weyl.jobs == 4
        assert settings.weyl.z33_mode == "sampled:200"

    def test_string_values_are_converted(self, config_file):
        assert ConfigManager(config_file).get_settings().bounds.closure_elements == 5000

    def test_untouched_values_keep_defaults(self, config_file):
        assert ConfigManager(config_file).get_settings().bounds.pauli_degree == 12

    def test_unknown_section_is_ignored(self, tmp_path):
        path = tmp_path / "config.json"
        path.write_text(json.dumps({"nonsense": {"x": 1}}))
        assert ConfigManager(path).get_settings() == WorkbenchSettings()

    def test_missing_file_raises(self, tmp_path):
        with pytest.raises(ConfigurationError, match="Failed to read"):
            ConfigManager(tmp_path / "absent.json").get_settings()

    def test_malformed_json_raises(self, tmp_path):
        path = tmp_path / "config.json"
        path.write_text("{not json")
        with pytest.raises(ConfigurationError, match="Failed to read"):
            ConfigManager(path).get_settings()

    def test_non_section_mapping_raises(self, tmp_path):
        path = tmp_path / "config.json"
        path.write_text(json.dumps({"weyl": 3}))
        with pytest.raises(ConfigurationError, match="must map sections"):
            ConfigManager(path).get_settings()


# ── Environment layer ────────────────────────────────────────────────


class TestEnvOverrides:
    """WEYL_<SECTION>_<KEY> environment variables."""

    def test_env_overrides_default(self, manager):
        with patch.dict("os.environ", {"WEYL_WEYL_JOBS": "3"}):
            manager.refresh()
            assert manager.get_settings().weyl.jobs == 3

    def test_env_beats_file(self, config_file):
        with patch.dict("os.environ", {"WEYL_WEYL_JOBS": "8"}):
            assert ConfigManager(config_file).get_settings().weyl.jobs == 8

    def test_boolean_env_value(self, manager):
        with patch.dict("os.environ", {"WEYL_WEYL_Z25_EXHAUSTIVE": "yes"}):
            manager.refresh()
            assert manager.get_settings().weyl.z25_exhaustive is True

    def test_invalid_env_value_raises(self, manager):
        with patch.dict("os.environ", {"WEYL_BOUNDS_PAULI_DEGREE": "-4"}):
            with pytest.raises(ConfigurationError, match="Invalid configuration"):
                manager.refresh()

    def test_non_numeric_for_int_field_raises(self, manager):
        with patch.dict("os.environ", {"WEYL_WEYL_JOBS": "many"}):
            with pytest.raises(ConfigurationError):
                manager.refresh()


# ── Caching ──────────────────────────────────────────────────────────


class TestCaching:
    """get_settings caches until refresh or clear_cache."""

    def test_settings_are_cached(self, manager):
        assert manager.get_settings() is manager.get_settings()

    def test_cache_ignores_later_env_changes(self, manager):
        manager.get_settings()
        with patch.dict("os.environ", {"WEYL_WEYL_JOBS": "6"}):
            assert manager.get_settings().weyl.jobs == 1

    def test_clear_cache_reloads(self, manager):
        manager.get_settings()
        with patch.dict("os.environ", {"WEYL_WEYL_JOBS": "6"}):
            manager.clear_cache()
            assert manager.get_settings().weyl.jobs == 6

    def test_refresh_replaces_cache(self, manager):
        first = manager.get_settings()
        manager.refresh()
        assert manager.get_settings() is not first


# ── get() ────────────────────────────────────────────────────────────


class TestGet:
    def test_returns_specific_value(self, manager):
        assert manager.get("bounds", "pauli_degree") == 12

    def test_returns_default_for_missing_key(self, manager):
        assert manager.get("bounds", "missing", "fallback") == "fallback"

    def test_returns_default_for_missing_section(self, manager):
        assert manager.get("missing", "key", 7) == 7

    def test_returns_none_when_no_default_and_missing(self, manager):
        assert manager.get("weyl", "missing") is None

    def test_get_config_is_nested_dict(self, manager):
        config = manager.get_config()
        assert set(config) == {"bounds", "weyl", "algebras", "logging", "workspace"}


# ── _convert_value() ─────────────────────────────────────────────────


class TestConvertValue:
    @pytest.mark.parametrize("value", ["true", "True", "TRUE", "yes", "Yes"])
    def test_true_variants(self, manager, value):
        assert manager._convert_value(value) is True

    @pytest.mark.parametrize("value", ["false", "False", "no", "NO"])
    def test_false_variants(self, manager, value):
        assert manager._convert_value(value) is False

    def test_integer(self, manager):
        assert manager._convert_value("42") == 42

    def test_negative_integer(self, manager):
        assert manager._convert_value("-7") == -7

    def test_float(self, manager):
        assert manager._convert_value("0.5") == 0.5

    def test_plain_string_unchanged(self, manager):
        assert manager._convert_value("sampled:500") == "sampled:500"

    def test_non_string_unchanged(self, manager):
        assert manager._convert_value(12) == 12


# ── Module-level accessor ────────────────────────────────────────────


class TestModuleAccessor:
    """get_settings() and configure() share one process-wide manager."""

    def test_get_settings_creates_singleton(self):
        assert config_module._config_manager is None
        get_settings()
        assert isinstance(config_module._config_manager, ConfigManager)

    def test_get_settings_is_stable(self):
        assert get_settings() is get_settings()

    def test_configure_installs_file(self, config_file):
        configure(config_file)
        assert get_settings().weyl.jobs == 4

    def test_configure_none_resets_to_defaults(self, config_file):
        configure(config_file)
        configure(None)
        assert get_settings().weyl.jobs == 1

    def test_dotenv_loaded_once(self):
        with patch("weyl_gradings.config.load_dotenv") as mock_load:
            ConfigManager._env_loaded = False
            ConfigManager()
            ConfigManager()
            assert mock_load.call_count == 1
