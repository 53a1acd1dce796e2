"""Exact linear programming models.

All coefficients are ``fractions.Fraction``; variables are implicitly
nonnegative and the objective is always minimized.
"""

# Standard library
from enum import Enum
from fractions import Fraction
from typing import Annotated, Self

# Third-party
from pydantic import ConfigDict, Field, model_validator

# Local
from omlkit.config.constants import Relation
from omlkit.models.base import OmlBaseModel, Rational

LinearForm = dict[str, Rational]


class Constraint(OmlBaseModel):
    """One linear constraint ``sum(coefficients) relation rhs``.

    Attributes:
        label: Stable identifier (``"target"``, ``"coupling:7"``, ``"block:123"``).
        coefficients: Variable to coefficient, in print order.
        relation: ``=`` or ``=<``.
        rhs: Right-hand side.
    """

    model_config = ConfigDict(frozen=True)

    label: Annotated[str, Field(min_length=1, description="Constraint identifier")]
    coefficients: Annotated[LinearForm, Field(min_length=1, description="Variable coefficients")]
    relation: Relation
    rhs: Rational

    def lhs_value(self, point: dict[str, Fraction]) -> Fraction:
        """Evaluate the left-hand side at a point (missing variables are 0)."""
        return sum((coef * point.get(name, Fraction(0)) for name, coef in self.coefficients.items()), Fraction(0))

    def is_satisfied(self, point: dict[str, Fraction]) -> bool:
        """Exact satisfaction test."""
        value = self.lhs_value(point)
        return value == self.rhs if self.relation is Relation.EQ else value <= self.rhs


class LpProblem(OmlBaseModel):
    """Minimize a linear form subject to constraints over nonnegative variables.

    Examples:
        >>> p = LpProblem(variables=("m",), objective={"m": 1},
        ...               constraints=(Constraint(label="c", coefficients={"m": 1},
        ...                                       relation=Relation.EQ, rhs=1),))
        >>> p.objective_value({"m": Fraction(1)})
        Fraction(1, 1)
    """

    model_config = ConfigDict(frozen=True)

    variables: Annotated[tuple[str, ...], Field(description="Declared variables in column order")]
    objective: Annotated[LinearForm, Field(default_factory=dict, description="Form to minimize")]
    constraints: Annotated[tuple[Constraint, ...], Field(default=(), description="Constraints in print order")] = ()

    @model_validator(mode="after")
    def _check_references(self) -> Self:
        """Constraints and objective may only mention declared variables."""
        declared = set(self.variables)
        if len(declared) != len(self.variables):
            raise ValueError("Duplicate variable declaration")

        unknown = set(self.objective) - declared
        for constraint in self.constraints:
            unknown |= set(constraint.coefficients) - declared

        if unknown:
            raise ValueError(f"Undeclared LP variables: {sorted(unknown)}")

        labels = [constraint.label for constraint in self.constraints]
        if len(set(labels)) != len(labels):
            raise ValueError("Duplicate constraint labels")

        return self

    def constraint(self, label: str) -> Constraint:
        """Return a constraint by label.

        Raises:
            KeyError: If no constraint has that label.
        """
        for constraint in self.constraints:
            if constraint.label == label:
                return constraint

        raise KeyError(label)

    def objective_value(self, point: dict[str, Fraction]) -> Fraction:
        """Objective value at a point."""
        return sum((coef * point.get(name, Fraction(0)) for name, coef in self.objective.items()), Fraction(0))

    def is_feasible_point(self, point: dict[str, Fraction]) -> bool:
        """Exact feasibility certificate: nonnegativity and every constraint."""
        if any(point.get(name, Fraction(0)) < 0 for name in self.variables):
            return False

        return all(constraint.is_satisfied(point) for constraint in self.constraints)

    def relax(self, label: str) -> "LpProblem":
        """Copy of the problem with one equality turned into ``=<``."""
        constraint = self.constraint(label)
        relaxed = constraint.model_copy(update={"relation": Relation.LE})
        constraints = tuple(relaxed if c.label == label else c for c in self.constraints)
        return self.model_copy(update={"constraints": constraints})


class LpStatus(str, Enum):
    """Solver status."""

    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


class LpOutcome(OmlBaseModel):
    """Result of an exact simplex solve.

    Attributes:
        status: Optimal, infeasible or unbounded.
        value: Optimal objective value (optimal only).
        point: Optimal vertex, every declared variable included (optimal only).
        pivots: Pivots performed over both phases.
    """

    model_config = ConfigDict(frozen=True)

    status: LpStatus
    value: Annotated[Rational | None, Field(default=None)] = None
    point: Annotated[dict[str, Rational] | None, Field(default=None)] = None
    pivots: Annotated[int, Field(default=0, ge=0)] = 0

    @property
    def is_optimal(self) -> bool:
        """True for an optimal outcome."""
        return self.status is LpStatus.OPTIMAL
