"""Logging setup and the stage logger used by the analyses.

Console records go to stderr; stdout carries verdict lines only.
"""

# Standard library
import logging
import sys
from pathlib import Path
from typing import Literal

LogLevel = Literal["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]

DEFAULT_FORMAT = "%(asctime)s | %(levelname)-8s | %(name)s | %(message)s"
DATE_FORMAT = "%Y-%m-%d %H:%M:%S"

# Third-party loggers held at WARNING (lark logs grammar construction at DEBUG)
QUIET_LOGGERS = ("lark",)


def _level(name: LogLevel) -> int:
    return logging.getLevelNamesMapping()[name]


def setup_logging(
        level: LogLevel = "INFO",
        format_string: str | None = None,
        console_level: LogLevel | None = None,
        log_file: Path | None = None,
) -> None:
    """Replace the root handlers with a stderr handler and an optional file handler.

    Args:
        level: Level of the file handler, and of the console when ``console_level`` is None.
        format_string: Record format (default: ``DEFAULT_FORMAT``).
        console_level: Level of the stderr handler.
        log_file: Append records to this file, creating its directory.
    """
    formatter = logging.Formatter(format_string or DEFAULT_FORMAT, datefmt=DATE_FORMAT)
    handlers: list[logging.Handler] = [logging.StreamHandler(sys.stderr)]
    handlers[0].setLevel(_level(console_level or level))

    if log_file:
        log_file.parent.mkdir(parents=True, exist_ok=True)
        handlers.append(logging.FileHandler(log_file, mode="a", encoding="utf-8"))
        handlers[-1].setLevel(_level(level))

    root = logging.getLogger()
    root.handlers.clear()
    root.setLevel(min(_level(level), _level(console_level or level)))
    for handler in handlers:
        handler.setFormatter(formatter)
        root.addHandler(handler)

    for name in QUIET_LOGGERS:
        logging.getLogger(name).setLevel(logging.WARNING)


def get_logger(name: str) -> logging.Logger:
    """Module logger; pass ``__name__``."""
    return logging.getLogger(name)


class StageLogger:
    """Logger for one analysis stage with trailing ``key=value`` context.

    Examples:
        >>> log = StageLogger("godowski")
        >>> log.debug("Stage %s built", 4, members=812)
        # "Stage 4 built | members=812"
    """

    def __init__(self, stage_name: str) -> None:
        self.stage_name = stage_name
        self._logger = logging.getLogger(f"omlkit.analysis.{stage_name}")

    def log(self, level: int, message: str, *args: object, **context: object) -> None:
        """Emit ``message % args`` followed by the context, if the level is enabled."""
        if not self._logger.isEnabledFor(level):
            return

        text = message % args if args else message
        if context:
            text = " | ".join([text, *(f"{key}={value}" for key, value in context.items())])

        self._logger.log(level, text)

    def debug(self, message: str, *args: object, **context: object) -> None:
        self.log(logging.DEBUG, message, *args, **context)

    def info(self, message: str, *args: object, **context: object) -> None:
        self.log(logging.INFO, message, *args, **context)

    def warning(self, message: str, *args: object, **context: object) -> None:
        self.log(logging.WARNING, message, *args, **context)

    def error(self, message: str, *args: object, **context: object) -> None:
        self.log(logging.ERROR, message, *args, **context)

    def progress(self, current: int, total: int, item: str = "") -> None:
        """Log ``Progress: current/total (pct%)`` at INFO."""
        percentage = current / total * 100 if total else 0.0
        suffix = f" - {item}" if item else ""
        self.log(logging.INFO, "Progress: %d/%d (%.1f%%)%s", current, total, percentage, suffix)
