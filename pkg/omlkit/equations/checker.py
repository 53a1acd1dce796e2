"""Exhaustive equation checking on finite lattices.

Assignments are enumerated in lexicographic order over element indices,
the last variable varying fastest. Partial assignments are kept as rows
of a numpy frontier that grows one variable at a time; each hypothesis is
applied as soon as both of its variables are bound, and the relation is
evaluated on whole chunks of complete assignments.
"""

# Standard library
from collections.abc import Callable, Mapping
import threading
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass, field

# Third-party
import numpy as np
from numpy.typing import NDArray

# Local
from omlkit.config.constants import ONE_INDEX, ZERO_INDEX, Operator, Relation
from omlkit.config.settings import get_settings
from omlkit.errors import MissingVariableError, VariableCapError
from omlkit.lattice.oml import ElementRef, OmlLattice
from omlkit.models.equation import BinaryTerm, CheckResult, CheckVerdict, Complement, Const, Equation, Term, Var
from omlkit.utils.logging import get_logger

logger = get_logger(__name__)

Rows = NDArray[np.intp]
Evaluator = Callable[[Rows], NDArray[np.intp]]


def compile_term(lattice: OmlLattice, term: Term, positions: Mapping[str, int]) -> Evaluator:
    """Compile a term into a vectorized evaluator over assignment rows.

    Args:
        lattice: Lattice whose tables interpret the operators.
        term: Term to compile.
        positions: Column of each variable in the assignment rows.

    Returns:
        Function mapping an ``(rows, variables)`` index array to the term's
        value (an element index) on every row.
    """
    match term:
        case Var(name=name):
            column = positions[name]
            return lambda rows: rows[:, column]
        case Const(value=value):
            index = ONE_INDEX if value == 1 else ZERO_INDEX
            return lambda rows: np.full(rows.shape[0], index, dtype=np.intp)
        case Complement(operand=operand):
            inner = compile_term(lattice, operand, positions)
            ortho = lattice.ortho_table
            return lambda rows: ortho[inner(rows)]
        case BinaryTerm(op=op, left=left, right=right):
            table = {
                Operator.MEET: lattice.meet_table,
                Operator.JOIN: lattice.join_table,
                Operator.IMP: lattice.imp_table,
            }[op]
            first = compile_term(lattice, left, positions)
            second = compile_term(lattice, right, positions)
            return lambda rows: table[first(rows), second(rows)]

    raise TypeError(f"Unknown term {term!r}")


@dataclass
class _Search:
    """State of one frontier search over a slice of the assignment space."""

    lattice: OmlLattice
    equation: Equation
    chunk_rows: int
    tried: int = 0
    hypotheses_at: list[list[tuple[int, int]]] = field(default_factory=list)
    relation: Callable[[Rows], NDArray[np.bool_]] | None = None
    cancelled: Callable[[], bool] = lambda: False

    def __post_init__(self) -> None:
        positions = {name: i for i, name in enumerate(self.equation.variables)}
        self.hypotheses_at = [[] for _ in self.equation.variables]
        for hypothesis in self.equation.hypotheses:
            left, right = positions[hypothesis.left], positions[hypothesis.right]
            self.hypotheses_at[max(left, right)].append((left, right))

        lhs = compile_term(self.lattice, self.equation.lhs, positions)
        rhs = compile_term(self.lattice, self.equation.rhs, positions)
        if self.equation.relation is Relation.EQ:
            self.relation = lambda rows: lhs(rows) == rhs(rows)
        else:
            leq = self.lattice.leq_table
            self.relation = lambda rows: leq[lhs(rows), rhs(rows)]

    def filter(self, rows: Rows, depth: int) -> Rows:
        """Drop rows violating a hypothesis completed at column ``depth``."""
        leq, ortho = self.lattice.leq_table, self.lattice.ortho_table
        for left, right in self.hypotheses_at[depth]:
            rows = rows[leq[rows[:, left], ortho[rows[:, right]]]]

        return rows

    def run(self, rows: Rows, depth: int) -> Rows | None:
        """Search below the given partial assignments; return the first failing row."""
        if depth == len(self.equation.variables):
            assert self.relation is not None
            failing = np.flatnonzero(~self.relation(rows))
            if failing.size:
                self.tried += int(failing[0]) + 1
                return rows[failing[0]]

            self.tried += rows.shape[0]
            return None

        size = self.lattice.size
        step = max(1, self.chunk_rows // size)
        values = np.arange(size, dtype=np.intp)
        for start in range(0, rows.shape[0], step):
            if self.cancelled():
                return None

            block = rows[start:start + step]
            extended = np.column_stack([np.repeat(block, size, axis=0), np.tile(values, block.shape[0])])
            extended = self.filter(extended, depth)
            if extended.shape[0] == 0:
                continue

            found = self.run(extended, depth + 1)
            if found is not None:
                return found

        return None


def check_equation(
        lattice: OmlLattice,
        equation: Equation,
        var_cap: int | None = None,
        workers: int = 1,
        chunk_rows: int | None = None,
) -> CheckResult:
    """Check an equation on every assignment of lattice elements to its variables.

    Args:
        lattice: Built, law-verified lattice.
        equation: Equation to check.
        var_cap: Maximum accepted variable count (defaults to the ``var_cap`` setting).
        workers: Threads splitting the search by the first variable's value.
        chunk_rows: Frontier chunk bound (defaults to the ``chunk_rows`` setting).

    Returns:
        ``holds`` when no assignment falsifies the equation, else ``fails``
        with the first failing assignment in enumeration order.

    Raises:
        VariableCapError: If the equation has more variables than the cap.

    Examples:
        >>> check_equation(build_lattice(parse_diagram("123.")), generate_ngo(3)).assignments_tried
        512
    """
    settings = get_settings()
    var_cap = settings.var_cap if var_cap is None else var_cap
    chunk_rows = settings.chunk_rows if chunk_rows is None else chunk_rows

    if equation.arity > var_cap:
        raise VariableCapError(
            f"Equation has {equation.arity} variables; the cap is {var_cap} "
            f"(cost grows as {lattice.size}^{equation.arity})"
        )

    if workers > 1 and equation.arity > 1:
        witness, tried = _partitioned_search(lattice, equation, chunk_rows, workers)
    else:
        search = _Search(lattice, equation, chunk_rows)
        witness = search.run(np.zeros((1, 0), dtype=np.intp), 0)
        tried = search.tried

    if witness is None:
        logger.debug("Equation holds after %d assignments", tried)
        return CheckResult(verdict=CheckVerdict.HOLDS, assignments_tried=tried)

    labelled = {name: lattice.label(int(value)) for name, value in zip(equation.variables, witness, strict=True)}
    return CheckResult(verdict=CheckVerdict.FAILS, witness=labelled, assignments_tried=tried)


def _partitioned_search(
        lattice: OmlLattice,
        equation: Equation,
        chunk_rows: int,
        workers: int,
) -> tuple[Rows | None, int]:
    """Split the search by the value of the first variable and merge in order.

    A witness found from one start cancels the searches from later starts.
    The witness of the lowest start wins, so the witness and the count match
    the single-threaded search.
    """
    starts = _Search(lattice, equation, chunk_rows).filter(np.arange(lattice.size, dtype=np.intp)[:, None], 0)
    stop = threading.Event()
    lock = threading.Lock()
    lowest = [starts.shape[0]]

    def search_from(position: int) -> tuple[int, Rows | None, int]:
        search = _Search(
            lattice, equation, chunk_rows,
            cancelled=lambda: stop.is_set() and position > lowest[0],
        )
        found = search.run(starts[position][None, :], 1)
        if found is not None:
            with lock:
                lowest[0] = min(lowest[0], position)
            stop.set()

        return position, found, search.tried

    results: dict[int, tuple[Rows | None, int]] = {}
    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = {pool.submit(search_from, position): position for position in range(starts.shape[0])}
        for future in as_completed(futures):
            if future.cancelled():
                continue

            position, found, count = future.result()
            results[position] = (found, count)
            if found is not None:
                for pending, later in futures.items():
                    if later > lowest[0]:
                        pending.cancel()

    tried = 0
    for position in range(starts.shape[0]):
        found, count = results[position]
        tried += count
        if found is not None:
            return found, tried

    return None, tried


def evaluate_at(
        lattice: OmlLattice,
        equation: Equation,
        assignment: Mapping[str, ElementRef],
) -> tuple[bool, bool | None]:
    """Evaluate an equation at a single assignment.

    Args:
        lattice: Lattice to evaluate in.
        equation: Equation to evaluate.
        assignment: Variable to element index or label.

    Returns:
        ``(hypotheses_hold, relation_holds)``; the relation is not evaluated
        (None) when a hypothesis fails.

    Raises:
        MissingVariableError: If a declared variable is unassigned.
    """
    missing = [name for name in equation.variables if name not in assignment]
    if missing:
        raise MissingVariableError(f"No value for variables {missing}")

    row = np.array([[lattice.index(assignment[name]) for name in equation.variables]], dtype=np.intp)
    search = _Search(lattice, equation, chunk_rows=1)
    for depth in range(equation.arity):
        row = search.filter(row, depth)

    if row.shape[0] == 0:
        return False, None

    assert search.relation is not None
    return True, bool(search.relation(row)[0])
