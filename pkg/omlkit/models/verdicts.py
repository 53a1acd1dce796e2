"""Verdict models for the Godowski scan and the strong-state analysis."""

# Standard library
from enum import Enum
from fractions import Fraction
from typing import TYPE_CHECKING, Annotated, Self

# Third-party
from pydantic import ConfigDict, Field, model_validator

# Local
from omlkit.config.constants import ElementKind
from omlkit.models.base import OmlBaseModel, Rational
from omlkit.models.lp import LpProblem

if TYPE_CHECKING:
    from omlkit.lattice.oml import OmlLattice


# ============================================================================
# n-Go scan
# ============================================================================


class NGoOutcome(str, Enum):
    """Outcome kinds of the n-Go scan."""

    FAILS = "fails"
    PASSES = "passes"
    INCONCLUSIVE = "inconclusive"


class NGoVerdict(OmlBaseModel):
    """Result of the n-Go dynamic programming scan.

    Attributes:
        outcome: fails, passes or inconclusive.
        n: First failing n (fails only).
        converged_at: Stage whose family equals the next one (passes only).
        cutoff: Largest n that would have been tested.
        chain: Falsifying chain a1..an as element labels (fails only).
        stage_operations: Meet/implication evaluations per stage, starting at stage 2.
        stage_sizes: Total family size per stage, starting at stage 2.
    """

    model_config = ConfigDict(frozen=True)

    outcome: NGoOutcome
    n: Annotated[int | None, Field(default=None, ge=3)] = None
    converged_at: Annotated[int | None, Field(default=None, ge=2)] = None
    cutoff: Annotated[int, Field(ge=3)]
    chain: Annotated[tuple[str, ...] | None, Field(default=None)] = None
    stage_operations: Annotated[tuple[int, ...], Field(default=())] = ()
    stage_sizes: Annotated[tuple[int, ...], Field(default=())] = ()

    @model_validator(mode="after")
    def _check_outcome_fields(self) -> Self:
        """Each outcome carries its own fields."""
        if self.outcome is NGoOutcome.FAILS and (self.n is None or self.chain is None or len(self.chain) != self.n):
            raise ValueError("a failing verdict needs n and a chain of length n")

        if self.outcome is NGoOutcome.PASSES and self.converged_at is None:
            raise ValueError("a passing verdict needs the convergence stage")

        return self


# ============================================================================
# States
# ============================================================================


class StateVector(OmlBaseModel):
    """A state given by its atom values.

    Values of other elements follow from additivity inside blocks and
    ``m(a') = 1 - m(a)``.
    """

    model_config = ConfigDict(frozen=True)

    atom_values: Annotated[
        dict[int, Rational],
        Field(description="Atom number -> value in [0, 1]")
    ]

    def value(self, lattice: "OmlLattice", element: int) -> Fraction:
        """Value of a lattice element under this state.

        Args:
            lattice: Pasted lattice the state lives on.
            element: Element index.

        Returns:
            Exact value in [0, 1].
        """
        element_id = lattice.element(element)
        match element_id.kind:
            case ElementKind.ZERO:
                return Fraction(0)
            case ElementKind.ONE:
                return Fraction(1)
            case ElementKind.COATOM:
                return 1 - self.atom_values[element_id.atoms[0]]
            case ElementKind.ATOM | ElementKind.BLOCK_JOIN:
                return sum((self.atom_values[atom] for atom in element_id.atoms), Fraction(0))
            case _:
                raise ValueError(f"Element {element_id.label} has no atom expansion")


class StateOutcome(str, Enum):
    """Outcome kinds of the strong-state analysis."""

    ADMITS = "admits"
    REFUTES = "refutes"
    STATELESS = "stateless"


class WitnessKind(str, Enum):
    """Relation between the two elements of a refuting pair."""

    INCOMPARABLE = "incomparable"
    COMPARABLE = "comparable"  # y < x


class WitnessPair(OmlBaseModel):
    """Pair x =/< y for which every state with m(x)=1 forces m(y)=1.

    Attributes:
        x: Label of the element forced to 1.
        y: Label of the minimized element.
        forced_minimum: Minimum of m(y); None when no state has m(x)=1.
        kind: Whether x and y are incomparable or y < x.
    """

    model_config = ConfigDict(frozen=True)

    x: str
    y: str
    forced_minimum: Annotated[Rational | None, Field(default=None)] = None
    kind: WitnessKind

    def __str__(self) -> str:
        return f"({self.x},{self.y})"


class StrongSetVerdict(OmlBaseModel):
    """Result of the strong-state analysis.

    Attributes:
        outcome: admits, refutes or stateless.
        states: One optimal state per order-violating pair (admits only).
        witness: First refuting pair in scan order (refutes only).
        problem: LP of the witness pair (refutes only).
        refuting_pairs: Every refuting pair when the scan ran over all pairs.
        pairs_checked: Number of pair problems solved.
    """

    model_config = ConfigDict(frozen=True)

    outcome: StateOutcome
    states: Annotated[tuple[StateVector, ...], Field(default=())] = ()
    witness: Annotated[WitnessPair | None, Field(default=None)] = None
    problem: Annotated[LpProblem | None, Field(default=None)] = None
    refuting_pairs: Annotated[tuple[WitnessPair, ...], Field(default=())] = ()
    pairs_checked: Annotated[int, Field(default=0, ge=0)] = 0

    @model_validator(mode="after")
    def _check_outcome_fields(self) -> Self:
        """A refutation carries its witness pair and problem."""
        if self.outcome is StateOutcome.REFUTES and (self.witness is None or self.problem is None):
            raise ValueError("a refuting verdict needs a witness pair and its problem")

        return self
