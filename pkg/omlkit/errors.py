"""Exception hierarchy for the toolkit.

Library code raises these; the CLI turns them into help text through
``omlkit.commands.errors.ErrorHandler``.
"""

# Standard library
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from omlkit.models.laws import LawReport


class OmlKitError(Exception):
    """Base exception for all toolkit errors."""


# ============================================================================
# Greechie diagrams
# ============================================================================


class DiagramParseError(OmlKitError, ValueError):
    """Raised when a diagram line violates the compact notation."""

    def __init__(self, message: str, column: int | None = None, line: int | None = None) -> None:
        """Initialize the parse error.

        Args:
            message: What is wrong with the line.
            column: 1-based column of the offending character, when known.
            line: 1-based line number in the source file, when known.
        """
        self.message = message
        self.column = column
        self.line = line
        super().__init__(self._compose())

    def _compose(self) -> str:
        """Build the message with its location prefix."""
        where = []
        if self.line is not None:
            where.append(f"line {self.line}")

        if self.column is not None:
            where.append(f"column {self.column}")

        return f"{', '.join(where)}: {self.message}" if where else self.message


class DiagramFileError(OmlKitError):
    """Raised when a diagram file cannot be read strictly."""

    def __init__(self, message: str, line: int | None = None) -> None:
        """Initialize the file error.

        Args:
            message: Description of the failure.
            line: 1-based line number of the offending line.
        """
        self.line = line
        super().__init__(message)


# ============================================================================
# Lattice construction
# ============================================================================


class LatticeConstructionError(OmlKitError):
    """Raised when a pasting does not yield an orthomodular lattice."""


class NotALatticeError(LatticeConstructionError):
    """Raised when the pasted order lacks a unique meet or join for some pair."""

    def __init__(self, message: str, pair: tuple[str, str] | None = None) -> None:
        """Initialize the error.

        Args:
            message: Description of the failure.
            pair: Labels of the offending element pair.
        """
        self.pair = pair
        super().__init__(message)


class LawViolationError(LatticeConstructionError):
    """Raised when a built structure violates an ortholattice or OML law."""

    def __init__(self, report: "LawReport") -> None:
        """Initialize the error from a failed law report.

        Args:
            report: Law report holding at least one failed check.
        """
        self.report = report
        failed = report.failures[0]
        witness = ", ".join(failed.counterexample or ())
        super().__init__(f"{failed.law} fails at ({witness})")


# ============================================================================
# Equations
# ============================================================================


class EquationSyntaxError(OmlKitError, ValueError):
    """Raised when equation text does not match the grammar."""

    def __init__(self, message: str, column: int | None = None) -> None:
        """Initialize the syntax error.

        Args:
            message: Description of the failure.
            column: 1-based column of the offending input.
        """
        self.column = column
        suffix = f" (column {column})" if column is not None else ""
        super().__init__(f"{message}{suffix}")


class ReservedVariableError(EquationSyntaxError):
    """Raised when the join operator letter is used as a variable."""


class UndeclaredVariableError(OmlKitError, ValueError):
    """Raised when an equation uses a variable it does not declare."""


class MissingVariableError(OmlKitError, KeyError):
    """Raised when an assignment does not cover every variable."""


class VariableCapError(OmlKitError):
    """Raised when an equation has more variables than the brute-force cap."""


# ============================================================================
# Linear programming and states
# ============================================================================


class SimplexError(OmlKitError):
    """Raised when the simplex method cannot complete."""


class PivotLimitError(SimplexError):
    """Raised when a solve exceeds the configured pivot ceiling."""


class PairSelectionError(OmlKitError, ValueError):
    """Raised when a state problem is requested for an unusable pair."""


# ============================================================================
# Equation synthesis
# ============================================================================


class MgeGenerationError(OmlKitError):
    """Raised when an equation cannot be synthesized from a lattice."""


class BalancingError(MgeGenerationError):
    """Raised when degenerate-term balancing does not reach a balanced equation."""

    def __init__(self, message: str, diagnostics: dict[str, object] | None = None) -> None:
        """Initialize the balancing error.

        Args:
            message: Description of the failure.
            diagnostics: Per-variable counts and term counts at the point of failure.
        """
        self.diagnostics = diagnostics or {}
        super().__init__(message)


class UnbalancedEquationError(OmlKitError, ValueError):
    """Raised when a condensed state equation is converted before balancing."""


class InternalConsistencyError(OmlKitError, AssertionError):
    """Raised when a result fails its own replay check (a defect, not bad input)."""
