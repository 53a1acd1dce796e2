"""Synthesis of Mayet-Godowski equations from lattices without strong states.

Starting from the LP of a refuting pair, block equalities are relaxed to
``<= 1`` one at a time while the optimum stays 1. The blocks that must stay
equalities become the left-hand terms of a condensed state equation, the
relaxed blocks contribute the right-hand terms, and the condensed equation
expands into an MGE that fails on the source lattice but holds in every
lattice with a strong set of states.
"""

# Standard library
import random
from collections.abc import Sequence
from itertools import combinations

# Local
from omlkit.config.constants import VARIABLE_NAMES, ElementKind, Relation
from omlkit.config.settings import get_settings
from omlkit.equations.checker import check_equation, evaluate_at
from omlkit.errors import (
    BalancingError,
    EquationSyntaxError,
    InternalConsistencyError,
    MgeGenerationError,
    ReservedVariableError,
    UnbalancedEquationError,
)
from omlkit.lattice.oml import OmlLattice
from omlkit.models.diagram import Block
from omlkit.models.equation import CheckVerdict, Equation, Hypothesis, Term, join, meet, var
from omlkit.models.lp import LpProblem, LpStatus
from omlkit.models.mge import CondensedStateEquation, CondensedTerm, MgeResult
from omlkit.models.verdicts import StateOutcome, StrongSetVerdict, WitnessPair
from omlkit.analysis.simplex import solve
from omlkit.analysis.states import strong_state_verdict
from omlkit.utils.logging import StageLogger

log = StageLogger("mge")

BLOCK_PREFIX = "block:"


def _solves_to_one(problem: LpProblem, max_pivots: int) -> bool:
    outcome = solve(problem, max_pivots)
    return outcome.status is LpStatus.OPTIMAL and outcome.value == 1


def minimize_constraints(
        base: LpProblem,
        seed: int | None = None,
        max_pivots: int | None = None,
) -> tuple[tuple[str, ...], tuple[str, ...], LpProblem]:
    """Relax block equalities greedily while the optimum stays 1.

    Args:
        base: Pair problem whose optimum is exactly 1.
        seed: Shuffle the relaxation order with this seed; input order when None.
        max_pivots: Simplex pivot ceiling per solve.

    Returns:
        Weakened blocks, kept blocks (both compact text, input order) and the
        final problem.

    Raises:
        MgeGenerationError: If the base problem does not solve to 1.
    """
    max_pivots = get_settings().max_pivots if max_pivots is None else max_pivots
    if not _solves_to_one(base, max_pivots):
        raise MgeGenerationError("the pair problem must solve to exactly 1 before weakening")

    labels = [c.label for c in base.constraints if c.label.startswith(BLOCK_PREFIX)]
    order = list(labels)
    if seed is not None:
        random.Random(seed).shuffle(order)

    problem = base
    relaxed: set[str] = set()
    for label in order:
        candidate = problem.relax(label)
        if _solves_to_one(candidate, max_pivots):
            problem = candidate
            relaxed.add(label)
            log.debug("Relaxed block", block=label.removeprefix(BLOCK_PREFIX))

    weakened = tuple(label.removeprefix(BLOCK_PREFIX) for label in labels if label in relaxed)
    kept = tuple(label.removeprefix(BLOCK_PREFIX) for label in labels if label not in relaxed)
    log.info("Weakening done", weakened=len(weakened), kept=len(kept))
    return weakened, kept, problem


def _forced_zero_atoms(lattice: OmlLattice, x: str) -> set[int]:
    """Atoms a state with m(x) = 1 must send to 0."""
    diagram = lattice.diagram
    assert diagram is not None
    element = lattice.element(x)

    match element.kind:
        case ElementKind.ATOM:
            (atom,) = element.atoms
            return {other for block in diagram.blocks_containing(atom) for other in block if other != atom}
        case ElementKind.COATOM:
            return {element.atoms[0]}
        case ElementKind.BLOCK_JOIN:
            block = next(b for b in diagram.blocks if set(element.atoms) <= set(b))
            return {other for other in block if other not in element.atoms}

    raise MgeGenerationError(f"element {element.label} cannot be forced to 1")


def _balance(
        lhs: list[CondensedTerm],
        rhs: list[CondensedTerm],
) -> tuple[list[CondensedTerm], list[CondensedTerm]]:
    """Repeat terms until every variable occurs equally often on both sides.

    A deficient variable gets the lexicographically first term containing it
    repeated on the short side; a repeated conjunct leaves the meet unchanged.
    """
    variables = list(dict.fromkeys(name for term in (*lhs, *rhs) for name in term))
    for _ in range(len(variables)):
        condensed = CondensedStateEquation(lhs=tuple(lhs), rhs=tuple(rhs))
        left, right = condensed.variable_counts()
        deficient = next((name for name in variables if left[name] != right[name]), None)
        if deficient is None:
            break

        side = lhs if left[deficient] < right[deficient] else rhs
        candidates = [term for term in side if deficient in term]
        if not candidates:
            break

        side.append(min(candidates))

    condensed = CondensedStateEquation(lhs=tuple(lhs), rhs=tuple(rhs))
    if not condensed.is_balanced:
        left, right = condensed.variable_counts()
        raise BalancingError(
            f"cannot balance {condensed.render()}",
            diagnostics={
                "lhs_counts": dict(left),
                "rhs_counts": dict(right),
                "lhs_terms": len(lhs),
                "rhs_terms": len(rhs),
            },
        )

    return lhs, rhs


def build_condensed(
        lattice: OmlLattice,
        pair: WitnessPair,
        kept: Sequence[str],
        weakened: Sequence[str],
) -> CondensedStateEquation:
    """Condensed state equation from a weakening result.

    Steps: force the atoms zeroed by m(x) = 1; kept blocks give the lhs terms
    (their non-zero atoms); weakened blocks give rhs terms (their atoms that
    occur on the lhs, empty ones dropped); atoms are renamed a, b, c, ... in
    first-occurrence order; terms are repeated until balanced.

    Raises:
        MgeGenerationError: If the lhs comes out empty.
        BalancingError: If balancing does not converge.
    """
    diagram = lattice.diagram
    if diagram is None:
        raise MgeGenerationError("equation synthesis needs a pasted lattice")

    by_text: dict[str, Block] = {diagram.block_text(block): block for block in diagram.blocks}
    zeros = _forced_zero_atoms(lattice, pair.x)

    lhs_atoms = [tuple(atom for atom in by_text[text] if atom not in zeros) for text in kept]
    lhs_atoms = [term for term in lhs_atoms if term]
    if not lhs_atoms:
        raise MgeGenerationError(f"no left-hand terms survive for pair {pair}")

    present = {atom for term in lhs_atoms for atom in term}
    rhs_atoms = [tuple(atom for atom in by_text[text] if atom in present) for text in weakened]
    rhs_atoms = [term for term in rhs_atoms if term]
    if not rhs_atoms:
        raise MgeGenerationError(f"no right-hand terms survive for pair {pair}")

    order = list(dict.fromkeys(atom for term in (*lhs_atoms, *rhs_atoms) for atom in term))
    if len(order) > len(VARIABLE_NAMES):
        raise MgeGenerationError(f"{len(order)} atoms exceed the variable alphabet")

    naming = {atom: VARIABLE_NAMES[i] for i, atom in enumerate(order)}
    lhs = [tuple(naming[atom] for atom in term) for term in lhs_atoms]
    rhs = [tuple(naming[atom] for atom in term) for term in rhs_atoms]
    singletons = tuple(term for term in rhs if len(term) == 1)
    if singletons:
        log.warning("Single-atom right-hand terms kept", terms=" ".join("".join(t) for t in singletons))

    lhs, rhs = _balance(lhs, rhs)
    return CondensedStateEquation(lhs=tuple(lhs), rhs=tuple(rhs), naming=naming, singletons=singletons)


def parse_condensed(text: str) -> CondensedStateEquation:
    """Parse the ``ab+cd=bg+fc`` notation.

    Raises:
        ReservedVariableError: If ``v`` appears.
        EquationSyntaxError: On any other malformed input.

    Examples:
        >>> parse_condensed("ad+be+cf=db+ec+fa").lhs
        (('a', 'd'), ('b', 'e'), ('c', 'f'))
    """
    compact = "".join(text.split())
    if compact.count("=") != 1:
        raise EquationSyntaxError("a condensed equation has exactly one '='")

    sides: list[tuple[CondensedTerm, ...]] = []
    for side in compact.split("="):
        terms = tuple(tuple(term) for term in side.split("+"))
        for position, term in enumerate(terms, start=1):
            if not term:
                raise EquationSyntaxError(f"empty term {position} in {side!r}")

            if "v" in term:
                raise ReservedVariableError("'v' is the join operator and cannot name a variable")

            bad = [name for name in term if name not in VARIABLE_NAMES]
            if bad:
                raise EquationSyntaxError(f"invalid variable {bad[0]!r}")

        sides.append(terms)

    try:
        return CondensedStateEquation(lhs=sides[0], rhs=sides[1])

    except ValueError as error:
        raise EquationSyntaxError(str(error)) from error


def mge_from_condensed(condensed: CondensedStateEquation) -> Equation:
    """Expand a balanced condensed equation into an MGE.

    Terms become joins, sides become meets of those joins, and every pair of
    variables sharing a term becomes an orthogonality hypothesis.

    Raises:
        UnbalancedEquationError: If variable or term counts differ across sides.

    Examples:
        >>> format_equation(mge_from_condensed(parse_condensed("a+b=b+a")))
        'a ^ b = b ^ a'
    """
    if not condensed.is_balanced:
        raise UnbalancedEquationError(f"{condensed.render()} is not balanced")

    seen: set[frozenset[str]] = set()
    hypotheses: list[Hypothesis] = []
    for term in (*condensed.lhs, *condensed.rhs):
        for left, right in combinations(term, 2):
            key = frozenset((left, right))
            if key not in seen:
                seen.add(key)
                hypotheses.append(Hypothesis(left=left, right=right))

    def side(terms: tuple[CondensedTerm, ...]) -> Term:
        return meet(*(join(*(var(name) for name in term)) for term in terms))

    return Equation.create(
        side(condensed.lhs),
        Relation.EQ,
        side(condensed.rhs),
        hypotheses=hypotheses,
        variables=condensed.variables,
    )


def generate_mge(
        lattice: OmlLattice,
        corpus: Sequence[tuple[str, OmlLattice]] = (),
        seed: int | None = None,
        source: str = "",
        verdict: StrongSetVerdict | None = None,
) -> MgeResult:
    """Synthesize an MGE failing on a lattice without strong states.

    Args:
        lattice: Pasted lattice whose strong-state verdict is ``refutes``.
        corpus: Named lattices admitting strong states; the MGE must hold on each.
        seed: Shuffle seed for the relaxation order.
        source: Identifier recorded on the result.
        verdict: Precomputed strong-state verdict for ``lattice``.

    Returns:
        The full synthesis record.

    Raises:
        MgeGenerationError: If the lattice admits strong states, the witness
            pair has no forced minimum of 1, or the MGE does not fail at the
            witness assignment.
        InternalConsistencyError: If the MGE fails on a corpus lattice.
    """
    verdict = strong_state_verdict(lattice) if verdict is None else verdict
    if verdict.outcome is not StateOutcome.REFUTES:
        raise MgeGenerationError(f"lattice {verdict.outcome.value} strong states; no MGE to synthesize")

    pair, base = verdict.witness, verdict.problem
    assert pair is not None and base is not None
    if pair.forced_minimum != 1:
        raise MgeGenerationError(f"pair {pair} has no state with m(x) = 1")

    weakened, kept, final = minimize_constraints(base, seed=seed)
    condensed = build_condensed(lattice, pair, kept, weakened)
    mge = mge_from_condensed(condensed)

    witness = {name: lattice.label(lattice.atom_index(atom)) for atom, name in condensed.naming.items()}
    if evaluate_at(lattice, mge, witness) != (True, False):
        raise MgeGenerationError(f"{condensed.render()} does not fail at its witness assignment")

    checks: dict[str, CheckVerdict] = {}
    for name, other in corpus:
        result = check_equation(other, mge)
        if not result.holds:
            raise InternalConsistencyError(f"generated MGE fails on corpus lattice {name}: {result.witness}")

        checks[name] = result.verdict

    log.info("MGE synthesized", condensed=condensed.render(), corpus=len(checks))
    return MgeResult(
        source=source,
        pair=pair,
        weakened=weakened,
        kept=kept,
        final_problem=final,
        condensed=condensed,
        mge=mge,
        witness_assignment=witness,
        corpus_checks=checks,
    )
