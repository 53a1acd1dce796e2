"""Exhaustive verification of lattice, ortholattice and orthomodular laws.

Every law is evaluated on the whole operation table at once with numpy;
associativity builds |L|^3 tensors, which is fine for pasted lattices of a
few hundred elements.
"""

# Standard library
from collections.abc import Callable
from typing import TYPE_CHECKING

# Third-party
import numpy as np
from numpy.typing import NDArray

# Local
from omlkit.config.constants import ONE_INDEX, ZERO_INDEX
from omlkit.models.laws import LawCheck, LawReport
from omlkit.utils.logging import get_logger

if TYPE_CHECKING:
    from omlkit.lattice.oml import OmlLattice

logger = get_logger(__name__)

LawFunction = Callable[["OmlLattice"], NDArray[np.bool_]]

_LAWS: list[tuple[str, LawFunction]] = []


def law(name: str) -> Callable[[LawFunction], LawFunction]:
    """Register a law; the function returns a boolean array that is True where the law holds."""

    def decorator(func: LawFunction) -> LawFunction:
        _LAWS.append((name, func))
        return func

    return decorator


def _ids(lattice: "OmlLattice") -> NDArray[np.intp]:
    return np.arange(lattice.size)


# ============================================================================
# Partial order and lattice axioms
# ============================================================================


@law("order reflexive")
def _reflexive(lattice: "OmlLattice") -> NDArray[np.bool_]:
    return lattice.leq_table.diagonal().copy()


@law("order antisymmetric")
def _antisymmetric(lattice: "OmlLattice") -> NDArray[np.bool_]:
    leq = lattice.leq_table
    return ~(leq & leq.T) | np.eye(lattice.size, dtype=bool)


@law("order transitive")
def _transitive(lattice: "OmlLattice") -> NDArray[np.bool_]:
    leq = lattice.leq_table
    # [x, y, z]: x <= y and y <= z imply x <= z
    return ~(leq[:, :, None] & leq[None, :, :]) | leq[:, None, :]


@law("meet commutative")
def _meet_commutative(lattice: "OmlLattice") -> NDArray[np.bool_]:
    return lattice.meet_table == lattice.meet_table.T


@law("join commutative")
def _join_commutative(lattice: "OmlLattice") -> NDArray[np.bool_]:
    return lattice.join_table == lattice.join_table.T


def _associative(table: NDArray[np.intp]) -> NDArray[np.bool_]:
    ids = np.arange(table.shape[0])
    left = table[table[:, :, None], ids[None, None, :]]
    right = table[ids[:, None, None], table[None, :, :]]
    return left == right


@law("meet associative")
def _meet_associative(lattice: "OmlLattice") -> NDArray[np.bool_]:
    return _associative(lattice.meet_table)


@law("join associative")
def _join_associative(lattice: "OmlLattice") -> NDArray[np.bool_]:
    return _associative(lattice.join_table)


@law("absorption")
def _absorption(lattice: "OmlLattice") -> NDArray[np.bool_]:
    ids = _ids(lattice)[:, None]
    meet, join = lattice.meet_table, lattice.join_table
    return (meet[ids, join] == ids) & (join[ids, meet] == ids)


@law("order agrees with meet and join")
def _order_agreement(lattice: "OmlLattice") -> NDArray[np.bool_]:
    ids = _ids(lattice)
    leq = lattice.leq_table
    by_meet = lattice.meet_table == ids[:, None]
    by_join = lattice.join_table == ids[None, :]
    return (leq == by_meet) & (leq == by_join)


# ============================================================================
# Ortholattice axioms
# ============================================================================


@law("complement join is one")
def _complement_join(lattice: "OmlLattice") -> NDArray[np.bool_]:
    return lattice.join_table[_ids(lattice), lattice.ortho_table] == ONE_INDEX


@law("complement meet is zero")
def _complement_meet(lattice: "OmlLattice") -> NDArray[np.bool_]:
    return lattice.meet_table[_ids(lattice), lattice.ortho_table] == ZERO_INDEX


@law("complement involutive")
def _involution(lattice: "OmlLattice") -> NDArray[np.bool_]:
    return lattice.ortho_table[lattice.ortho_table] == _ids(lattice)


@law("complement antitone")
def _antitone(lattice: "OmlLattice") -> NDArray[np.bool_]:
    ortho, leq = lattice.ortho_table, lattice.leq_table
    return ~leq | leq[ortho[None, :], ortho[:, None]]


# ============================================================================
# Orthomodularity and commutation
# ============================================================================


@law("orthomodular")
def _orthomodular(lattice: "OmlLattice") -> NDArray[np.bool_]:
    imp = lattice.imp_table
    both_one = (imp == ONE_INDEX) & (imp.T == ONE_INDEX)
    return both_one == np.eye(lattice.size, dtype=bool)


@law("commutation forms agree")
def _commutation_forms(lattice: "OmlLattice") -> NDArray[np.bool_]:
    ids = _ids(lattice)[:, None]
    meet, join, ortho, leq = lattice.meet_table, lattice.join_table, lattice.ortho_table, lattice.leq_table
    # a = (a ^ b) v (a ^ b')
    decomposes = join[meet, meet[ids, ortho[None, :]]] == ids
    # a ^ (a' v b) =< b
    bounded = leq[meet[ids, join[ortho[:, None], ids.T]], ids.T]
    return decomposes == bounded


def verify_laws(lattice: "OmlLattice") -> LawReport:
    """Check every registered law on the full operation tables.

    Args:
        lattice: Lattice to verify.

    Returns:
        Report listing each law with pass/fail and the first counterexample
        (element labels in index order) on failure.

    Examples:
        >>> verify_laws(build_lattice(parse_diagram("123."), verify=False)).passed
        True
    """
    checks = []
    for name, func in _LAWS:
        holds = np.asarray(func(lattice))
        if holds.all():
            checks.append(LawCheck(law=name, passed=True))
            continue

        position = np.unravel_index(int(np.flatnonzero(~holds.ravel())[0]), holds.shape)
        counterexample = tuple(lattice.label(int(i)) for i in position)
        logger.debug("Law '%s' fails at %s", name, counterexample)
        checks.append(LawCheck(law=name, passed=False, counterexample=counterexample))

    return LawReport(element_count=lattice.size, checks=tuple(checks))
