"""Shared utilities."""

# Local
from omlkit.utils.logging import StageLogger, get_logger, setup_logging

__all__ = [
    "StageLogger",
    "get_logger",
    "setup_logging",
]
