"""Unit tests for the CLI error handler registry."""

# Local
from omlkit.commands.errors import DOCS_URL, ErrorHandler, UsageError
from omlkit.errors import (
    DiagramFileError,
    DiagramParseError,
    EquationSyntaxError,
    InternalConsistencyError,
    MgeGenerationError,
    ReservedVariableError,
    VariableCapError,
)


class TestFormatMultilineHelp:
    """Tests for format_multiline_help."""

    @staticmethod
    def test_numbered_suggestions() -> None:
        """Should number suggestions and append the docs pointer."""
        text = ErrorHandler.format_multiline_help("Error: x", ["first", "second"], docs_url="docs")

        assert "❌ Error: x" in text
        assert "  1. first" in text
        assert "  2. second" in text
        assert text.endswith("Documentation: docs")

    @staticmethod
    def test_without_suggestions() -> None:
        """Should omit the suggestions header when there are none."""
        text = ErrorHandler.format_multiline_help("Error: x", [])

        assert "Suggestions:" not in text
        assert "Documentation" not in text


class TestHandle:
    """Tests for ErrorHandler.handle dispatch."""

    @staticmethod
    def test_diagram_file() -> None:
        """Should explain the diagram notation."""
        text = ErrorHandler.handle(DiagramFileError("bad.gre: line 2: block too short", line=2))

        assert "Invalid diagram file: bad.gre: line 2" in text
        assert "--lenient" in text
        assert DOCS_URL in text

    @staticmethod
    def test_diagram_parse() -> None:
        """Should name the line and column."""
        text = ErrorHandler.handle(DiagramParseError("unexpected ','", column=3, line=1))

        assert "Invalid diagram: line 1, column 3: unexpected ','" in text

    @staticmethod
    def test_most_specific_handler_wins() -> None:
        """Should prefer the reserved-variable handler over the syntax one."""
        reserved = ErrorHandler.handle(ReservedVariableError("'v' is the join operator", 3))
        syntax = ErrorHandler.handle(EquationSyntaxError("unexpected end of input"))

        assert "'v' always means join" in reserved
        assert "Operators:" in syntax

    @staticmethod
    def test_variable_cap() -> None:
        """Should point at the cap option."""
        assert "--var-cap" in ErrorHandler.handle(VariableCapError("Equation has 12 variables; the cap is 10"))

    @staticmethod
    def test_usage() -> None:
        """Should point at subcommand help."""
        text = ErrorHandler.handle(UsageError("give exactly one of --eq and --eq-file"))

        assert "Usage error: give exactly one of --eq and --eq-file" in text
        assert "--help" in text

    @staticmethod
    def test_internal() -> None:
        """Should ask for a report."""
        assert "Internal consistency failure" in ErrorHandler.handle(InternalConsistencyError("replay"))

    @staticmethod
    def test_toolkit_fallback() -> None:
        """Should name the error class for unregistered toolkit errors."""
        assert "MgeGenerationError: no terms" in ErrorHandler.handle(MgeGenerationError("no terms"))

    @staticmethod
    def test_missing_file() -> None:
        """Should suggest checking the path."""
        assert "Verify the file path is correct" in ErrorHandler.handle(FileNotFoundError("x.gre"))

    @staticmethod
    def test_generic() -> None:
        """Should fall back to the generic message."""
        text = ErrorHandler.handle(RuntimeError("boom"))

        assert "Error: boom" in text
        assert "--verbose" in text
