"""Comprehensive tests for configuration module."""

import os
import pytest
from unittest.mock import patch
from pydantic import ValidationError

from qqcorr.core.config import Settings, get_settings


@pytest.mark.unit
class TestSettingsDefaults:
    """Test cases for Settings default values."""

    def test_application_defaults(self):
        """Test application-related default settings."""
        with patch.dict(os.environ, {}, clear=True):
            settings = Settings(_env_file=None)

            assert settings.app_name == "qqcorr"
            assert settings.app_version == "1.0.0"
            assert settings.app_env == "development"

    def test_logging_defaults(self):
        """Test logging-related default settings."""
        with patch.dict(os.environ, {}, clear=True):
            settings = Settings(_env_file=None)

            assert settings.log_level == "WARNING"
            assert settings.log_format == "json"

    def test_tolerance_defaults(self):
        """Test numerical tolerances."""
        with patch.dict(os.environ, {}, clear=True):
            settings = Settings(_env_file=None)

            assert settings.hermitian_tolerance == 1e-10
            assert settings.trace_tolerance == 1e-10
            assert settings.psd_tolerance == 1e-10
            assert settings.jacobi_tolerance == 1e-13
            assert settings.probability_floor == 1e-14
            assert settings.discord_clamp_window == 1e-8
            assert settings.exponent_clamp == 700.0

    def test_optimizer_defaults(self):
        """Test measurement optimizer and oracle grid sizes."""
        with patch.dict(os.environ, {}, clear=True):
            settings = Settings(_env_file=None)

            assert (settings.coarse_theta_points, settings.coarse_phi_points) == (64, 128)
            assert settings.refine_starts == 4
            assert settings.refine_xatol == 1e-9
            assert settings.refine_fatol == 1e-12
            assert (settings.dense_theta_points, settings.dense_phi_points) == (721, 1440)

    def test_sweep_defaults(self):
        """Test sweep defaults."""
        with patch.dict(os.environ, {}, clear=True):
            settings = Settings(_env_file=None)

            assert settings.default_steps == 200
            assert settings.default_axis_max == 10.0
            assert settings.sweep_workers == 1


@pytest.mark.unit
class TestSettingsEnvironment:
    """Test environment variable overrides."""

    def test_prefixed_override(self):
        """Test QQCORR_-prefixed variables are read."""
        with patch.dict(os.environ, {
            'QQCORR_SWEEP_WORKERS': '4',
            'QQCORR_COARSE_THETA_POINTS': '32',
            'QQCORR_APP_ENV': 'test',
        }):
            settings = Settings(_env_file=None)

            assert settings.sweep_workers == 4
            assert settings.coarse_theta_points == 32
            assert settings.app_env == "test"

    def test_case_insensitive(self):
        """Test variable names are case-insensitive."""
        with patch.dict(os.environ, {'qqcorr_log_level': 'DEBUG'}):
            settings = Settings(_env_file=None)

            assert settings.log_level == "DEBUG"

    def test_unprefixed_ignored(self):
        """Test variables without the prefix do not leak in."""
        with patch.dict(os.environ, {'SWEEP_WORKERS': '8'}, clear=True):
            settings = Settings(_env_file=None)

            assert settings.sweep_workers == 1

    def test_log_format_normalized(self):
        """Test log format is lower-cased."""
        with patch.dict(os.environ, {'QQCORR_LOG_FORMAT': 'CONSOLE'}):
            settings = Settings(_env_file=None)

            assert settings.log_format == "console"


@pytest.mark.unit
class TestSettingsValidation:
    """Test field validators."""

    @pytest.mark.parametrize("field", [
        "hermitian_tolerance", "jacobi_tolerance", "probability_floor", "refine_xatol",
    ])
    def test_non_positive_tolerance_rejected(self, field):
        """Test tolerances must be positive."""
        with pytest.raises(ValidationError):
            Settings(_env_file=None, **{field: 0.0})

    @pytest.mark.parametrize("field", ["coarse_theta_points", "dense_phi_points", "default_steps"])
    def test_grid_size_rejected(self, field):
        """Test grids need at least two points."""
        with pytest.raises(ValidationError):
            Settings(_env_file=None, **{field: 1})

    def test_workers_rejected(self):
        """Test worker count must be positive."""
        with pytest.raises(ValidationError):
            Settings(_env_file=None, sweep_workers=0)

    def test_unknown_log_format_rejected(self):
        """Test only json and console renderers exist."""
        with pytest.raises(ValidationError):
            Settings(_env_file=None, log_format="xml")


@pytest.mark.unit
class TestGetSettings:
    """Test cached settings accessor."""

    def test_cached_instance(self):
        """Test get_settings returns the same object until cleared."""
        first = get_settings()
        second = get_settings()

        assert first is second

    def test_cache_clear_rereads_environment(self):
        """Test clearing the cache picks up new environment values."""
        get_settings()
        with patch.dict(os.environ, {'QQCORR_REFINE_STARTS': '7'}):
            get_settings.cache_clear()
            settings = get_settings()

            assert settings.refine_starts == 7
