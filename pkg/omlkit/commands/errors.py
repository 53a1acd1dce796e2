"""CLI error handling infrastructure.

Provides a centralized error handler registry that turns toolkit
exceptions into multi-line messages with suggestions.
"""

# Standard library
from typing import Callable

# Local
from omlkit.errors import (
    DiagramFileError,
    DiagramParseError,
    EquationSyntaxError,
    InternalConsistencyError,
    OmlKitError,
    ReservedVariableError,
    UndeclaredVariableError,
    VariableCapError,
)

DOCS_URL = "README.md (Quick Start)"


class CLIError(Exception):
    """Base exception for CLI-specific errors."""


class UsageError(CLIError):
    """Raised when options are missing, conflicting or malformed."""


class ErrorHandler:
    """Central error handler registry with decorator-based registration.

    Maps exception types to handler functions that generate
    helpful multi-line error messages with suggestions.
    """

    _HANDLERS: dict[type[Exception], Callable[[Exception], str]] = {}

    @classmethod
    def register(cls, exc_type: type[Exception]) -> Callable:
        """Decorator to register an error handler for an exception type.

        Args:
            exc_type: Exception type to handle

        Returns:
            Decorator function

        Example:
            @ErrorHandler.register(VariableCapError)
            def handle_cap(error: VariableCapError) -> str:
                return "Help text here..."
        """

        def decorator(handler: Callable[[Exception], str]) -> Callable:
            cls._HANDLERS[exc_type] = handler
            return handler

        return decorator

    @classmethod
    def handle(cls, error: Exception) -> str:
        """Get formatted help text for an error.

        The most specific registered class in the error's MRO wins.

        Args:
            error: Exception to handle

        Returns:
            Formatted error message with suggestions
        """
        for exc_type in type(error).__mro__:
            handler = cls._HANDLERS.get(exc_type)
            if handler:
                return handler(error)

        return cls._format_generic_error(error)

    @staticmethod
    def _format_generic_error(error: Exception) -> str:
        """Format generic error message."""
        return ErrorHandler.format_multiline_help(
            error_msg=f"Error: {error!s}",
            suggestions=["Re-run with --verbose for the full log"],
            docs_url=DOCS_URL,
        )

    @staticmethod
    def format_multiline_help(
            error_msg: str,
            suggestions: list[str],
            docs_url: str | None = None,
    ) -> str:
        """Format error with suggestions and documentation links.

        Args:
            error_msg: Main error message
            suggestions: List of actionable suggestions
            docs_url: Optional documentation URL

        Returns:
            Formatted multi-line help text
        """
        lines = [f"\n❌ {error_msg}\n"]

        if suggestions:
            lines.append("Suggestions:")
            for i, suggestion in enumerate(suggestions, 1):
                lines.append(f"  {i}. {suggestion}")

        if docs_url:
            lines.append(f"\nDocumentation: {docs_url}")

        return "\n".join(lines)


# ============================================================================
# Register handlers for specific exception types
# ============================================================================


@ErrorHandler.register(DiagramFileError)
def _handle_diagram_file(error: DiagramFileError) -> str:
    """Handle unreadable or malformed diagram files."""
    suggestions = [
        "Write one diagram per line, blocks separated by ',' and ended by '.' (e.g. 123,345,561.)",
        "Use atom characters 1-9, A-Z, a-z in that order",
        "Pass --lenient to skip malformed lines with a warning",
    ]

    return ErrorHandler.format_multiline_help(
        error_msg=f"Invalid diagram file: {error!s}",
        suggestions=suggestions,
        docs_url=DOCS_URL,
    )


@ErrorHandler.register(DiagramParseError)
def _handle_diagram_parse(error: DiagramParseError) -> str:
    """Handle a single malformed diagram."""
    return ErrorHandler.format_multiline_help(
        error_msg=f"Invalid diagram: {error!s}",
        suggestions=["Blocks have 3 or 4 atoms and share at most one atom pairwise"],
    )


@ErrorHandler.register(ReservedVariableError)
def _handle_reserved_variable(error: ReservedVariableError) -> str:
    """Handle use of the join operator as a variable."""
    return ErrorHandler.format_multiline_help(
        error_msg=f"Equation syntax error: {error!s}",
        suggestions=["Rename the variable; 'v' always means join"],
    )


@ErrorHandler.register(EquationSyntaxError)
def _handle_equation_syntax(error: EquationSyntaxError) -> str:
    """Handle malformed equation text."""
    suggestions = [
        "Operators: ' (complement), ^ (meet), v (join), -> (Sasaki implication)",
        "Relations: = and =<; hypotheses like 'a _|_ b & c _|_ d |= ...'",
    ]

    return ErrorHandler.format_multiline_help(
        error_msg=f"Equation syntax error: {error!s}",
        suggestions=suggestions,
    )


@ErrorHandler.register(UndeclaredVariableError)
def _handle_undeclared_variable(error: UndeclaredVariableError) -> str:
    """Handle equations using undeclared variables."""
    return ErrorHandler.format_multiline_help(
        error_msg=f"Equation error: {error!s}",
        suggestions=["Declare every variable that appears in the equation"],
    )


@ErrorHandler.register(VariableCapError)
def _handle_variable_cap(error: VariableCapError) -> str:
    """Handle equations with too many variables for brute force."""
    suggestions = [
        "Raise the cap with --var-cap (or OMLKIT_VAR_CAP) if the lattices are small",
        "Add orthogonality hypotheses to prune the search",
    ]

    return ErrorHandler.format_multiline_help(
        error_msg=str(error),
        suggestions=suggestions,
    )


@ErrorHandler.register(UsageError)
def _handle_usage(error: UsageError) -> str:
    """Handle bad option combinations."""
    return ErrorHandler.format_multiline_help(
        error_msg=f"Usage error: {error!s}",
        suggestions=["Run 'omlkit <subcommand> --help' for the accepted options"],
    )


@ErrorHandler.register(InternalConsistencyError)
def _handle_internal(error: InternalConsistencyError) -> str:
    """Handle failed self-checks (defects)."""
    return ErrorHandler.format_multiline_help(
        error_msg=f"Internal consistency failure: {error!s}",
        suggestions=["Please report this with the input diagram and command line"],
        docs_url=DOCS_URL,
    )


@ErrorHandler.register(OmlKitError)
def _handle_toolkit_error(error: OmlKitError) -> str:
    """Handle any other toolkit error."""
    return ErrorHandler.format_multiline_help(
        error_msg=f"{type(error).__name__}: {error!s}",
        suggestions=["Re-run with --verbose for the full log"],
    )


@ErrorHandler.register(FileNotFoundError)
def _handle_file_not_found(error: FileNotFoundError) -> str:
    """Handle missing input files."""
    suggestions = [
        "Verify the file path is correct",
        "Use absolute paths to avoid confusion",
    ]

    return ErrorHandler.format_multiline_help(
        error_msg=f"File not found: {error!s}",
        suggestions=suggestions,
    )
