"""Two-phase tableau simplex in exact rational arithmetic.

The tableau is a numpy object array of ``fractions.Fraction``; no tolerance
appears anywhere. Entering and leaving variables follow Bland's rule
(lowest index), which rules out cycling.

Column layout: structural variables, one slack per ``=<`` row, then one
artificial per row that has no unit slack column.
"""

# Standard library
from fractions import Fraction

# Third-party
import numpy as np
from numpy.typing import NDArray

# Local
from omlkit.config.constants import Relation
from omlkit.config.settings import get_settings
from omlkit.errors import PivotLimitError
from omlkit.models.lp import LpOutcome, LpProblem, LpStatus
from omlkit.utils.logging import get_logger

logger = get_logger(__name__)

ZERO = Fraction(0)
ONE = Fraction(1)

Tableau = NDArray[np.object_]

RELATION_SYMBOL = {Relation.EQ: "=", Relation.LE: "<="}


class _Tableau:
    """Constraint rows ``[A | b]`` with a reduced-cost row and a basis."""

    def __init__(self, rows: Tableau, basis: list[int], max_pivots: int, pivots: int = 0) -> None:
        self.rows = rows
        self.basis = basis
        self.max_pivots = max_pivots
        self.pivots = pivots
        self.costs: Tableau = np.zeros(rows.shape[1], dtype=object)

    def price(self, cost: Tableau) -> None:
        """Set the reduced-cost row for a cost vector over the columns (last entry 0)."""
        reduced = cost.copy()
        for row, column in enumerate(self.basis):
            if cost[column] != ZERO:
                reduced = reduced - cost[column] * self.rows[row]

        self.costs = reduced

    def pivot(self, row: int, column: int) -> None:
        """Make ``column`` basic in ``row``."""
        self.pivots += 1
        if self.pivots > self.max_pivots:
            raise PivotLimitError(f"simplex exceeded {self.max_pivots} pivots")

        self.rows[row] = self.rows[row] / self.rows[row, column]
        for other in range(self.rows.shape[0]):
            if other != row and self.rows[other, column] != ZERO:
                self.rows[other] = self.rows[other] - self.rows[other, column] * self.rows[row]

        if self.costs[column] != ZERO:
            self.costs = self.costs - self.costs[column] * self.rows[row]

        self.basis[row] = column

    def optimize(self, allowed: int) -> bool:
        """Run Bland pivots over the first ``allowed`` columns.

        Returns:
            False if the objective is unbounded below, True at optimality.
        """
        while True:
            entering = next((j for j in range(allowed) if self.costs[j] < ZERO), None)
            if entering is None:
                return True

            best: tuple[Fraction, int, int] | None = None
            for row in range(self.rows.shape[0]):
                coefficient = self.rows[row, entering]
                if coefficient > ZERO:
                    candidate = (self.rows[row, -1] / coefficient, self.basis[row], row)
                    if best is None or candidate[:2] < best[:2]:
                        best = candidate

            if best is None:
                return False

            self.pivot(best[2], entering)

    @property
    def objective(self) -> Fraction:
        """Current objective value (negated corner of the cost row)."""
        return -self.costs[-1]


def solve(problem: LpProblem, max_pivots: int | None = None) -> LpOutcome:
    """Minimize the problem's objective exactly.

    Args:
        problem: Linear program over nonnegative variables.
        max_pivots: Pivot ceiling over both phases (defaults to the
            ``max_pivots`` setting).

    Returns:
        Optimal outcome with value and vertex, or infeasible / unbounded.

    Raises:
        PivotLimitError: If the ceiling is reached.

    Examples:
        >>> solve(problem).value
        Fraction(1, 1)
    """
    max_pivots = get_settings().max_pivots if max_pivots is None else max_pivots
    names = problem.variables
    structural = len(names)
    column_of = {name: j for j, name in enumerate(names)}
    constraints = problem.constraints
    slack_rows = [i for i, c in enumerate(constraints) if c.relation is Relation.LE]

    # Rows with a unit slack and nonnegative rhs start with that slack basic
    width = structural + len(slack_rows)
    dense = np.full((len(constraints), width + 1), ZERO, dtype=object)
    for i, constraint in enumerate(constraints):
        for name, coefficient in constraint.coefficients.items():
            dense[i, column_of[name]] = Fraction(coefficient)

        dense[i, -1] = Fraction(constraint.rhs)

    slack_column = {row: structural + k for k, row in enumerate(slack_rows)}
    for row, column in slack_column.items():
        dense[row, column] = ONE

    basis: list[int | None] = [None] * len(constraints)
    for i in range(len(constraints)):
        if dense[i, -1] < ZERO:
            dense[i] = -dense[i]
        elif i in slack_column:
            basis[i] = slack_column[i]

    artificial_rows = [i for i, column in enumerate(basis) if column is None]
    total = width + len(artificial_rows)
    rows = np.full((len(constraints), total + 1), ZERO, dtype=object)
    rows[:, :width] = dense[:, :width]
    rows[:, -1] = dense[:, -1]
    for k, row in enumerate(artificial_rows):
        rows[row, width + k] = ONE
        basis[row] = width + k

    tableau = _Tableau(rows, [int(column) for column in basis if column is not None], max_pivots)

    # Phase 1: minimize the sum of artificials
    if artificial_rows:
        phase_one = np.full(total + 1, ZERO, dtype=object)
        phase_one[width:total] = ONE
        tableau.price(phase_one)
        tableau.optimize(total)
        if tableau.objective > ZERO:
            logger.debug("Problem infeasible after %d pivots", tableau.pivots)
            return LpOutcome(status=LpStatus.INFEASIBLE, pivots=tableau.pivots)

        tableau = _drive_out_artificials(tableau, width)

    # Phase 2: original objective over structural and slack columns
    cost = np.full(tableau.rows.shape[1], ZERO, dtype=object)
    for name, coefficient in problem.objective.items():
        cost[column_of[name]] = Fraction(coefficient)

    tableau.price(cost)
    if not tableau.optimize(width):
        return LpOutcome(status=LpStatus.UNBOUNDED, pivots=tableau.pivots)

    point = {name: ZERO for name in names}
    for row, column in enumerate(tableau.basis):
        if column < structural:
            point[names[column]] = tableau.rows[row, -1]

    value = problem.objective_value(point)
    logger.debug("Optimal value %s after %d pivots", value, tableau.pivots)
    return LpOutcome(status=LpStatus.OPTIMAL, value=value, point=point, pivots=tableau.pivots)


def _drive_out_artificials(tableau: _Tableau, width: int) -> _Tableau:
    """Pivot zero-level artificials out of the basis and drop redundant rows.

    Returns a tableau restricted to the structural and slack columns.
    """
    keep: list[int] = []
    for row in range(tableau.rows.shape[0]):
        if tableau.basis[row] < width:
            keep.append(row)
            continue

        column = next((j for j in range(width) if tableau.rows[row, j] != ZERO), None)
        if column is None:
            continue  # redundant equality

        tableau.pivot(row, column)
        keep.append(row)

    rows = np.concatenate([tableau.rows[keep, :width], tableau.rows[keep, -1:]], axis=1)
    return _Tableau(rows, [tableau.basis[row] for row in keep], tableau.max_pivots, tableau.pivots)


# ============================================================================
# Text format
# ============================================================================


def format_linear(form: dict[str, Fraction]) -> str:
    """Render a linear form as ``m1 + m2 - 2 m3``."""
    parts: list[str] = []
    for name, coefficient in form.items():
        coefficient = Fraction(coefficient)
        magnitude = abs(coefficient)
        text = name if magnitude == ONE else f"{magnitude} {name}"
        if not parts:
            parts.append(text if coefficient >= ZERO else f"-{text}")
        else:
            parts.append(f"+ {text}" if coefficient >= ZERO else f"- {text}")

    return " ".join(parts) if parts else "0"


def print_problem(problem: LpProblem) -> str:
    """Render a problem in the solver-style text format.

    The first line is ``min: <objective>;`` followed by one constraint per
    line, e.g. ``m1 + m2 + m3 = 1;`` or ``m5 + m6 + m7 <= 1;``.
    """
    lines = [f"min: {format_linear(problem.objective)};"]
    for constraint in problem.constraints:
        relation = RELATION_SYMBOL[constraint.relation]
        lines.append(f"{format_linear(constraint.coefficients)} {relation} {Fraction(constraint.rhs)};")

    return "\n".join(lines)
