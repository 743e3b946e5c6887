"""Unit tests for structured logging setup."""

import logging
from unittest.mock import patch

import pytest
import structlog

from qqcorr.core.config import Settings
from qqcorr.core.logging import configure_logging


@pytest.mark.unit
class TestConfigureLogging:
    """Test structlog configuration."""

    def test_json_renderer(self):
        """Test the default renderer is JSON."""
        with patch("qqcorr.core.logging.structlog.configure") as mock_configure:
            configure_logging(Settings(_env_file=None))

        processors = mock_configure.call_args[1]["processors"]
        assert isinstance(processors[-1], structlog.processors.JSONRenderer)
        assert processors[0] is structlog.stdlib.filter_by_level

    def test_console_renderer(self):
        """Test the console renderer can be selected."""
        with patch("qqcorr.core.logging.structlog.configure") as mock_configure:
            configure_logging(Settings(_env_file=None, log_format="console"))

        processors = mock_configure.call_args[1]["processors"]
        assert isinstance(processors[-1], structlog.dev.ConsoleRenderer)

    def test_level_applied(self):
        """Test the root level follows the settings."""
        with patch("qqcorr.core.logging.structlog.configure"), \
                patch("qqcorr.core.logging.logging.basicConfig") as mock_basic:
            configure_logging(Settings(_env_file=None, log_level="debug"))

        assert mock_basic.call_args[1]["level"] == logging.DEBUG

    def test_unknown_level_falls_back(self):
        """Test an unknown level name falls back to WARNING."""
        with patch("qqcorr.core.logging.structlog.configure"), \
                patch("qqcorr.core.logging.logging.basicConfig") as mock_basic:
            configure_logging(Settings(_env_file=None, log_level="chatty"))

        assert mock_basic.call_args[1]["level"] == logging.WARNING
