"""Pytest configuration and root fixtures.

This file contains only the auto-use fixtures that must run for all tests.
Shared test fixtures are in _tests/unit/conftest.py.
"""

# Standard library
import logging

# Third-party
import pytest

# Local
from omlkit.config.settings import get_settings


@pytest.fixture(autouse=True)
def clear_settings_cache():
    """Drop the cached settings singleton around each test.

    ``get_settings`` is an ``lru_cache`` singleton; tests that set
    ``OMLKIT_*`` environment variables need a fresh instance.

    Yields:
        None: Control is yielded to the test function.
    """
    get_settings.cache_clear()
    yield  # Test runs here
    get_settings.cache_clear()


@pytest.fixture(autouse=True)
def restore_root_logger():
    """Put the root logger back after tests that call ``setup_logging``.

    Yields:
        None: Control is yielded to the test function.
    """
    root = logging.getLogger()
    handlers, level = root.handlers[:], root.level
    yield
    root.handlers[:] = handlers
    root.setLevel(level)
