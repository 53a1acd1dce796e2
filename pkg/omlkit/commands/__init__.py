"""CLI support package: error handling and display formatting."""

# Local
from omlkit.commands.errors import CLIError, ErrorHandler, UsageError
from omlkit.commands.formatters import BatchFormatter, LawFormatter, MgeFormatter

__all__ = [
    "BatchFormatter",
    "CLIError",
    "ErrorHandler",
    "LawFormatter",
    "MgeFormatter",
    "UsageError",
]
