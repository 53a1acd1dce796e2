"""Strong sets of states on pasted lattices, decided by exact linear programs.

A state is fixed by its atom values: every block sums to 1, and all other
elements are joins of orthogonal atoms inside a block. For a pair x =/< y
the lattice needs a state with m(x) = 1 and m(y) < 1; when the minimum of
m(y) under m(x) = 1 is exactly 1 no such state exists and the lattice
admits no strong set of states.
"""

# Standard library
from fractions import Fraction

# Third-party
import numpy as np

# Local
from omlkit.config.constants import ONE_INDEX, ZERO_INDEX, ElementKind, Relation
from omlkit.config.settings import get_settings
from omlkit.errors import PairSelectionError
from omlkit.lattice.oml import ElementRef, OmlLattice
from omlkit.models.diagram import atom_char
from omlkit.models.lp import Constraint, LpProblem, LpStatus
from omlkit.models.verdicts import StateOutcome, StateVector, StrongSetVerdict, WitnessKind, WitnessPair
from omlkit.analysis.simplex import solve
from omlkit.utils.logging import StageLogger

log = StageLogger("states")

TARGET_LABEL = "target"


def atom_variable(atom: int) -> str:
    """LP variable of an atom (``m7``)."""
    return f"m{atom_char(atom)}"


def complement_variable(atom: int) -> str:
    """LP variable of an atom complement (``m7'``)."""
    return f"m{atom_char(atom)}'"


def _require_pasted(lattice: OmlLattice) -> None:
    if lattice.diagram is None:
        raise PairSelectionError("state problems need a lattice pasted from a Greechie diagram")


def block_constraints(lattice: OmlLattice) -> LpProblem:
    """One equality ``sum of atom values = 1`` per block, no objective.

    Args:
        lattice: Pasted lattice.

    Returns:
        Problem over the atom variables in atom order.
    """
    _require_pasted(lattice)
    diagram = lattice.diagram
    assert diagram is not None
    constraints = tuple(
        Constraint(
            label=f"block:{diagram.block_text(block)}",
            coefficients={atom_variable(atom): Fraction(1) for atom in block},
            relation=Relation.EQ,
            rhs=Fraction(1),
        )
        for block in diagram.blocks
    )
    variables = tuple(atom_variable(atom) for atom in diagram.atoms)
    return LpProblem(variables=variables, constraints=constraints)


def _value_form(lattice: OmlLattice, element: int) -> tuple[dict[str, Fraction], list[Constraint]]:
    """Linear form of an element's value, plus the coupling it needs."""
    element_id = lattice.element(element)
    match element_id.kind:
        case ElementKind.ATOM:
            return {atom_variable(element_id.atoms[0]): Fraction(1)}, []
        case ElementKind.COATOM:
            atom = element_id.atoms[0]
            coupling = Constraint(
                label=f"coupling:{atom_char(atom)}",
                coefficients={atom_variable(atom): Fraction(1), complement_variable(atom): Fraction(1)},
                relation=Relation.EQ,
                rhs=Fraction(1),
            )
            return {complement_variable(atom): Fraction(1)}, [coupling]
        case ElementKind.BLOCK_JOIN:
            return {atom_variable(atom): Fraction(1) for atom in element_id.atoms}, []

    raise PairSelectionError(f"element {element_id.label} has no value form")


def pair_problem(lattice: OmlLattice, x: ElementRef, y: ElementRef) -> LpProblem:
    """LP minimizing m(y) over states with m(x) = 1.

    Constraint order: the target ``m(x) = 1``, couplings ``mK + mK' = 1`` for
    complemented elements (x first), then the blocks in diagram order.

    Args:
        lattice: Pasted lattice.
        x: Element forced to 1.
        y: Element to minimize.

    Returns:
        The pair problem.

    Raises:
        PairSelectionError: If x <= y, either element is 0 or 1, or the
            lattice is not pasted.
    """
    _require_pasted(lattice)
    x, y = lattice.index(x), lattice.index(y)
    if not (lattice.is_nontrivial(x) and lattice.is_nontrivial(y)):
        raise PairSelectionError("pair elements must differ from 0 and 1")

    if lattice.leq(x, y):
        raise PairSelectionError(f"{lattice.label(x)} =< {lattice.label(y)}; the pair carries no information")

    base = block_constraints(lattice)
    target, x_couplings = _value_form(lattice, x)
    objective, y_couplings = _value_form(lattice, y)

    couplings: list[Constraint] = []
    for coupling in (*x_couplings, *y_couplings):
        if coupling.label not in {c.label for c in couplings}:
            couplings.append(coupling)

    extra = [name for c in couplings for name in c.coefficients if name not in base.variables]
    constraints = (
        Constraint(label=TARGET_LABEL, coefficients=target, relation=Relation.EQ, rhs=Fraction(1)),
        *couplings,
        *base.constraints,
    )
    return LpProblem(
        variables=base.variables + tuple(dict.fromkeys(extra)),
        objective=objective,
        constraints=constraints,
    )


def _witness(lattice: OmlLattice, x: int, y: int, minimum: Fraction | None) -> WitnessPair:
    kind = WitnessKind.COMPARABLE if lattice.leq(y, x) else WitnessKind.INCOMPARABLE
    return WitnessPair(x=lattice.label(x), y=lattice.label(y), forced_minimum=minimum, kind=kind)


def strong_state_verdict(
        lattice: OmlLattice,
        all_pairs: bool = False,
        max_pivots: int | None = None,
) -> StrongSetVerdict:
    """Decide whether a pasted lattice admits a strong set of states.

    Ordered pairs of nontrivial elements with x =/< y are scanned in index
    order. A pair refutes when the minimum of m(y) under m(x) = 1 is 1, or
    when no state gives m(x) = 1 at all.

    Args:
        lattice: Built, law-verified pasted lattice.
        all_pairs: Keep scanning after the first refuting pair.
        max_pivots: Simplex pivot ceiling per solve.

    Returns:
        ``stateless`` if the block system is infeasible, ``refutes`` with the
        first refuting pair and its problem, or ``admits`` with one optimal
        state per pair.
    """
    max_pivots = get_settings().max_pivots if max_pivots is None else max_pivots
    if solve(block_constraints(lattice), max_pivots).status is LpStatus.INFEASIBLE:
        log.info("Block system infeasible", elements=lattice.size)
        return StrongSetVerdict(outcome=StateOutcome.STATELESS)

    states: list[StateVector] = []
    refuting: list[WitnessPair] = []
    first_problem: LpProblem | None = None
    checked = 0
    leq = lattice.leq_table

    rows = lattice.size - 2
    for row, x in enumerate(lattice.iter_nontrivial(), start=1):
        for y in lattice.iter_nontrivial():
            if leq[x, y]:
                continue

            problem = pair_problem(lattice, x, y)
            outcome = solve(problem, max_pivots)
            checked += 1

            if outcome.status is LpStatus.INFEASIBLE or outcome.value == 1:
                witness = _witness(lattice, x, y, outcome.value)
                log.debug("Refuting pair", pair=str(witness), minimum=outcome.value)
                refuting.append(witness)
                if first_problem is None:
                    first_problem = problem

                if not all_pairs:
                    break

                continue

            assert outcome.point is not None
            diagram = lattice.diagram
            assert diagram is not None
            states.append(StateVector(atom_values={atom: outcome.point[atom_variable(atom)] for atom in diagram.atoms}))

        if refuting and not all_pairs:
            break

        log.progress(row, rows, lattice.label(x))

    if refuting:
        return StrongSetVerdict(
            outcome=StateOutcome.REFUTES,
            witness=refuting[0],
            problem=first_problem,
            refuting_pairs=tuple(refuting),
            pairs_checked=checked,
        )

    log.debug("Strong set found", pairs=checked)
    return StrongSetVerdict(outcome=StateOutcome.ADMITS, states=tuple(states), pairs_checked=checked)


def state_violations(lattice: OmlLattice, state: StateVector) -> list[str]:
    """List every state law the given state breaks on the full element set.

    Checks m(1) = 1, block sums, additivity on orthogonal pairs, and the
    derived properties: m(a) + m(a') = 1, monotonicity, range [0, 1],
    m(a) = m(b) = 1 iff m(a) + m(b) = 2, and m(a ^ b) = 1 implying
    m(a) = m(b) = 1.

    Returns:
        Human-readable violations; empty when the state is valid.
    """
    values = np.array([state.value(lattice, i) for i in range(lattice.size)], dtype=object)
    labels = lattice.labels
    leq, meet, join, ortho = lattice.leq_table, lattice.meet_table, lattice.join_table, lattice.ortho_table
    problems: list[str] = []

    def first(mask: np.ndarray, law: str) -> None:
        mask = np.asarray(mask, dtype=bool)
        if mask.any():
            position = np.unravel_index(int(np.flatnonzero(mask.ravel())[0]), mask.shape)
            problems.append(f"{law} fails at ({', '.join(labels[int(i)] for i in position)})")

    if values[ONE_INDEX] != 1 or values[ZERO_INDEX] != 0:
        problems.append("m(1) = 1 and m(0) = 0 fail")

    for block in lattice.blocks:
        if sum(values[i] for i in block) != 1:
            problems.append(f"block ({', '.join(labels[i] for i in block)}) does not sum to 1")

    outer = np.add.outer(values, values)
    first((leq[:, ortho] & (values[join] != outer)), "additivity on orthogonal elements")
    first(values + values[ortho] != 1, "m(a) + m(a') = 1")
    first(leq & ~(values[:, None] <= values[None, :]).astype(bool), "monotonicity")
    first((values < 0) | (values > 1), "range [0, 1]")
    both_one = (values[:, None] == 1) & (values[None, :] == 1)
    first(both_one != (outer == 2), "m(a) = m(b) = 1 iff m(a) + m(b) = 2")
    first((values[meet] == 1) & ~both_one, "m(a ^ b) = 1 implies m(a) = m(b) = 1")
    return problems
