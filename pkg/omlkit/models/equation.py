"""Equation AST models: terms, hypotheses, equations and check results.

Terms form a discriminated union on ``kind`` so equations round-trip
through JSON. ``BinaryTerm`` with ``Operator.IMP`` is the Sasaki
implication ``a' v (a ^ b)``.
"""

# Standard library
from collections.abc import Iterator
from enum import Enum
from functools import reduce
from typing import Annotated, Literal, Self

# Third-party
from pydantic import ConfigDict, Field, model_validator

# Local
from omlkit.config.constants import Operator, Relation
from omlkit.errors import UndeclaredVariableError
from omlkit.models.base import OmlBaseModel


class Var(OmlBaseModel):
    """Variable reference."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["var"] = "var"
    name: Annotated[str, Field(min_length=1, description="Variable name")]


class Const(OmlBaseModel):
    """Lattice constant 0 or 1."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["const"] = "const"
    value: Annotated[Literal[0, 1], Field(description="0 (bottom) or 1 (top)")]


class Complement(OmlBaseModel):
    """Orthocomplement of a term."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["complement"] = "complement"
    operand: "Term"


class BinaryTerm(OmlBaseModel):
    """Meet, join or Sasaki implication of two terms."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["binary"] = "binary"
    op: Operator
    left: "Term"
    right: "Term"


Term = Annotated[Var | Const | Complement | BinaryTerm, Field(discriminator="kind")]

Complement.model_rebuild()
BinaryTerm.model_rebuild()


def term_variables(term: Term) -> Iterator[str]:
    """Yield variable names in textual (left-to-right) order, with repeats."""
    match term:
        case Var(name=name):
            yield name
        case Complement(operand=operand):
            yield from term_variables(operand)
        case BinaryTerm(left=left, right=right):
            yield from term_variables(left)
            yield from term_variables(right)
        case _:
            return


# ============================================================================
# Term builders
# ============================================================================


def var(name: str) -> Var:
    """Build a variable term."""
    return Var(name=name)


def compl(term: Term) -> Complement:
    """Build the orthocomplement of a term."""
    return Complement(operand=term)


def meet(*terms: Term) -> Term:
    """Left-nested meet of one or more terms."""
    return reduce(lambda left, right: BinaryTerm(op=Operator.MEET, left=left, right=right), terms)


def join(*terms: Term) -> Term:
    """Left-nested join of one or more terms."""
    return reduce(lambda left, right: BinaryTerm(op=Operator.JOIN, left=left, right=right), terms)


def imp(left: Term, right: Term) -> BinaryTerm:
    """Sasaki implication ``left -> right``."""
    return BinaryTerm(op=Operator.IMP, left=left, right=right)


# ============================================================================
# Equations
# ============================================================================


class Hypothesis(OmlBaseModel):
    """Orthogonality hypothesis ``left _|_ right`` (left =< right')."""

    model_config = ConfigDict(frozen=True)

    left: Annotated[str, Field(min_length=1)]
    right: Annotated[str, Field(min_length=1)]


class Equation(OmlBaseModel):
    """Hypotheses and a relation between two terms.

    Attributes:
        hypotheses: Orthogonality statements between variables.
        lhs: Left-hand term.
        relation: ``=`` or ``=<``.
        rhs: Right-hand term.
        variables: Declared variables; their order is the enumeration order
            of the brute-force checker (last varies fastest).
    """

    model_config = ConfigDict(frozen=True)

    hypotheses: Annotated[tuple[Hypothesis, ...], Field(default=())] = ()
    lhs: Term
    relation: Relation
    rhs: Term
    variables: Annotated[tuple[str, ...], Field(description="Declared variables in order")]

    @model_validator(mode="after")
    def _check_declared(self) -> Self:
        """Every variable used must be declared exactly once."""
        if len(set(self.variables)) != len(self.variables):
            raise ValueError(f"Duplicate variable declaration in {self.variables}")

        undeclared = set(self.used_variables()) - set(self.variables)
        if undeclared:
            raise ValueError(f"Undeclared variables: {sorted(undeclared)}")

        return self

    @classmethod
    def create(
            cls,
            lhs: Term,
            relation: Relation,
            rhs: Term,
            hypotheses: tuple[Hypothesis, ...] | list[Hypothesis] = (),
            variables: tuple[str, ...] | list[str] | None = None,
    ) -> "Equation":
        """Build an equation, deriving variable order when not given.

        Without ``variables`` the order is first appearance in hypotheses,
        then lhs, then rhs.

        Raises:
            UndeclaredVariableError: If ``variables`` misses a used variable.
        """
        hypotheses = tuple(hypotheses)
        used = list(dict.fromkeys(_hypothesis_variables(hypotheses)))
        used.extend(name for name in term_variables(lhs) if name not in used)
        used.extend(name for name in term_variables(rhs) if name not in used)

        if variables is None:
            variables = used

        else:
            missing = [name for name in used if name not in variables]
            if missing:
                raise UndeclaredVariableError(f"Variables {missing} are used but not declared")

        return cls(hypotheses=hypotheses, lhs=lhs, relation=relation, rhs=rhs, variables=tuple(variables))

    def used_variables(self) -> list[str]:
        """Variables in first-appearance order (hypotheses, lhs, rhs)."""
        names = list(_hypothesis_variables(self.hypotheses))
        names.extend(term_variables(self.lhs))
        names.extend(term_variables(self.rhs))
        return list(dict.fromkeys(names))

    @property
    def arity(self) -> int:
        """Number of declared variables."""
        return len(self.variables)


def _hypothesis_variables(hypotheses: tuple[Hypothesis, ...]) -> Iterator[str]:
    for hypothesis in hypotheses:
        yield hypothesis.left
        yield hypothesis.right


class CheckVerdict(str, Enum):
    """Outcome of an exhaustive equation check."""

    HOLDS = "holds"
    FAILS = "fails"


class CheckResult(OmlBaseModel):
    """Result of checking an equation on a lattice.

    Attributes:
        verdict: ``holds`` or ``fails``.
        witness: Variable to element label for the first failing assignment.
        assignments_tried: Complete assignments satisfying the hypotheses that
            were evaluated, up to and including the witness.
    """

    model_config = ConfigDict(frozen=True)

    verdict: CheckVerdict
    witness: Annotated[
        dict[str, str] | None,
        Field(default=None, description="First failing assignment (variable -> element label)")
    ] = None
    assignments_tried: Annotated[int, Field(ge=0, description="Evaluated assignments")]

    @model_validator(mode="after")
    def _witness_matches_verdict(self) -> Self:
        """A failing verdict carries a witness; a holding one does not."""
        if (self.verdict is CheckVerdict.FAILS) != (self.witness is not None):
            raise ValueError("witness must be present exactly when the verdict is 'fails'")

        return self

    @property
    def holds(self) -> bool:
        """True when no assignment falsifies the equation."""
        return self.verdict is CheckVerdict.HOLDS
