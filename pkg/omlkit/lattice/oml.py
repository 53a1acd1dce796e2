"""Finite orthomodular lattices as numpy operation tables.

``build_lattice`` pastes the Boolean blocks of a Greechie diagram;
``OmlLattice.from_order`` accepts any finite ortholattice given by its
order and orthocomplement. Elements are integer indices with ``0`` at
index 0 and ``I`` at index 1; pasted lattices continue with atoms a1..aN,
their complements a1'..aN', then the proper two-atom joins of 4-blocks.
"""

# Standard library
from collections.abc import Iterator, Sequence
from functools import cached_property
from itertools import combinations

# Third-party
import numpy as np
from numpy.typing import NDArray

# Local
from omlkit.config.constants import ONE_INDEX, ZERO_INDEX, ElementKind
from omlkit.config.settings import get_settings
from omlkit.errors import LatticeConstructionError, LawViolationError, NotALatticeError
from omlkit.lattice.laws import verify_laws
from omlkit.models.diagram import GreechieDiagram
from omlkit.models.element import ElementId
from omlkit.utils.logging import get_logger

logger = get_logger(__name__)

BoolTable = NDArray[np.bool_]
IndexTable = NDArray[np.intp]
ElementRef = int | str


class OmlLattice:
    """Finite (ortho)lattice with precomputed operation tables.

    Attributes:
        elements: Element identities in index order.
        leq_table: ``leq_table[x, y]`` is True iff x <= y.
        meet_table: Index of x ^ y.
        join_table: Index of x v y.
        ortho_table: Index of x'.
        diagram: Source diagram for pasted lattices, else None.

    Examples:
        >>> lattice = build_lattice(parse_diagram("123."))
        >>> lattice.label(lattice.join("a1", "a2"))
        "a3'"
    """

    def __init__(
            self,
            elements: Sequence[ElementId],
            leq_table: BoolTable,
            meet_table: IndexTable,
            join_table: IndexTable,
            ortho_table: IndexTable,
            diagram: GreechieDiagram | None = None,
    ) -> None:
        """Initialize from complete tables (see ``build_lattice``)."""
        self.elements: tuple[ElementId, ...] = tuple(elements)
        self.leq_table = leq_table
        self.meet_table = meet_table
        self.join_table = join_table
        self.ortho_table = ortho_table
        self.diagram = diagram
        self._index = {element.label: position for position, element in enumerate(self.elements)}

        for table in (leq_table, meet_table, join_table, ortho_table):
            table.setflags(write=False)

    # ------------------------------------------------------------------
    # Construction from an explicit order
    # ------------------------------------------------------------------

    @classmethod
    def from_order(cls, labels: Sequence[str], leq: BoolTable, ortho: Sequence[int]) -> "OmlLattice":
        """Build a lattice from an order relation and an orthocomplement map.

        Meet and join are derived from the order. Nothing is assumed about
        orthomodularity, so non-orthomodular ortholattices can be inspected
        with ``verify_laws``.

        Args:
            labels: Element labels; index 0 must be the bottom, index 1 the top.
            leq: Square boolean matrix, reflexive and transitive.
            ortho: Orthocomplement as a list of indices.

        Returns:
            The lattice.

        Raises:
            LatticeConstructionError: If the order is not a bounded partial order
                with bottom at 0 and top at 1.
            NotALatticeError: If some pair lacks a unique meet or join.
        """
        leq = np.asarray(leq, dtype=bool)
        size = len(labels)
        if leq.shape != (size, size) or len(ortho) != size:
            raise LatticeConstructionError("order and orthocomplement must match the label count")

        _check_partial_order(leq, labels)
        if not (leq[ZERO_INDEX].all() and leq[:, ONE_INDEX].all()):
            raise LatticeConstructionError("index 0 must be the bottom and index 1 the top")

        elements = [ElementId(kind=ElementKind.GENERIC, name=label) for label in labels]
        meet_table, join_table = _bounds_tables(leq, labels)
        return cls(elements, leq, meet_table, join_table, np.asarray(ortho, dtype=np.intp))

    # ------------------------------------------------------------------
    # Element access
    # ------------------------------------------------------------------

    @property
    def size(self) -> int:
        """Number of elements."""
        return len(self.elements)

    def __len__(self) -> int:
        return self.size

    def __repr__(self) -> str:
        source = f" diagram={self.diagram.block_count} blocks" if self.diagram else ""
        return f"OmlLattice(size={self.size}{source})"

    def index(self, ref: ElementRef) -> int:
        """Element index from an index or a label such as ``"a7'"``.

        Raises:
            KeyError: If the label is unknown.
            IndexError: If the index is out of range.
        """
        if isinstance(ref, str):
            return self._index[ref]

        if not 0 <= ref < self.size:
            raise IndexError(f"element index {ref} out of range 0..{self.size - 1}")

        return int(ref)

    def label(self, ref: ElementRef) -> str:
        """Label of an element."""
        return self.elements[self.index(ref)].label

    def element(self, ref: ElementRef) -> ElementId:
        """Identity of an element."""
        return self.elements[self.index(ref)]

    @property
    def labels(self) -> tuple[str, ...]:
        """All labels in index order."""
        return tuple(element.label for element in self.elements)

    @property
    def atoms(self) -> tuple[int, ...]:
        """Indices of atom elements."""
        return tuple(i for i, element in enumerate(self.elements) if element.kind is ElementKind.ATOM)

    @property
    def blocks(self) -> tuple[tuple[int, ...], ...]:
        """Blocks of the source diagram as tuples of atom element indices."""
        if self.diagram is None:
            return ()

        return tuple(tuple(self.atom_index(atom) for atom in block) for block in self.diagram.blocks)

    def atom_index(self, atom: int) -> int:
        """Element index of a 1-based atom number (pasted lattices)."""
        return self._index[f"a{atom}"]

    def is_nontrivial(self, ref: ElementRef) -> bool:
        """True for every element other than 0 and 1."""
        return self.index(ref) not in (ZERO_INDEX, ONE_INDEX)

    # ------------------------------------------------------------------
    # Operations
    # ------------------------------------------------------------------

    def leq(self, x: ElementRef, y: ElementRef) -> bool:
        """Order relation x <= y."""
        return bool(self.leq_table[self.index(x), self.index(y)])

    def meet(self, x: ElementRef, y: ElementRef) -> int:
        """Greatest lower bound x ^ y."""
        return int(self.meet_table[self.index(x), self.index(y)])

    def join(self, x: ElementRef, y: ElementRef) -> int:
        """Least upper bound x v y."""
        return int(self.join_table[self.index(x), self.index(y)])

    def ortho(self, x: ElementRef) -> int:
        """Orthocomplement x'."""
        return int(self.ortho_table[self.index(x)])

    @cached_property
    def imp_table(self) -> IndexTable:
        """Sasaki implication table: ``imp_table[a, b] = a' v (a ^ b)``."""
        table = self.join_table[self.ortho_table[:, None], self.meet_table]
        table.setflags(write=False)
        return table

    def sasaki_imp(self, a: ElementRef, b: ElementRef) -> int:
        """Sasaki implication a -> b = a' v (a ^ b)."""
        return int(self.imp_table[self.index(a), self.index(b)])

    def orthogonal(self, x: ElementRef, y: ElementRef) -> bool:
        """x _|_ y, i.e. x <= y'."""
        return bool(self.leq_table[self.index(x), self.ortho_table[self.index(y)]])

    def commutes(self, a: ElementRef, b: ElementRef) -> bool:
        """True iff a = (a ^ b) v (a ^ b')."""
        a, b = self.index(a), self.index(b)
        meet, join, ortho = self.meet_table, self.join_table, self.ortho_table
        return int(join[meet[a, b], meet[a, ortho[b]]]) == a

    def incomparable_pairs(self) -> list[tuple[int, int]]:
        """Ordered pairs (x, y) with neither x <= y nor y <= x, in index order."""
        incomparable = ~self.leq_table & ~self.leq_table.T
        return [(int(x), int(y)) for x, y in np.argwhere(incomparable)]

    def iter_nontrivial(self) -> Iterator[int]:
        """Indices of every element other than 0 and 1."""
        return (i for i in range(self.size) if i not in (ZERO_INDEX, ONE_INDEX))


# ============================================================================
# Pasting
# ============================================================================


def build_lattice(diagram: GreechieDiagram, verify: bool | None = None) -> OmlLattice:
    """Paste the Boolean blocks of a diagram into a finite OML.

    The order is the transitive closure of the per-block subset orders, with
    0, 1, shared atoms and atom complements identified across blocks.

    Args:
        diagram: Valid Greechie diagram.
        verify: Run ``verify_laws`` and reject violations. Defaults to the
            ``verify_laws`` setting.

    Returns:
        The pasted lattice.

    Raises:
        NotALatticeError: If some pair has no unique meet or join (loops of
            order 3 or 4 end here).
        LawViolationError: If an ortholattice or orthomodular law fails.
    """
    if verify is None:
        verify = get_settings().verify_laws

    elements, subset_index = _pasting_elements(diagram)
    size = len(elements)
    labels = [element.label for element in elements]

    leq = np.eye(size, dtype=bool)
    leq[ZERO_INDEX, :] = True
    leq[:, ONE_INDEX] = True
    for block in diagram.blocks:
        members = [(subset, subset_index[subset]) for subset in _subsets(block)]
        for lower, low_index in members:
            for upper, up_index in members:
                if lower <= upper:
                    leq[low_index, up_index] = True

    leq = _transitive_closure(leq)
    _check_partial_order(leq, labels)

    ortho = np.empty(size, dtype=np.intp)
    for block in diagram.blocks:
        full = frozenset(block)
        for subset in _subsets(block):
            ortho[subset_index[subset]] = subset_index[full - subset]

    meet_table, join_table = _bounds_tables(leq, labels)
    lattice = OmlLattice(elements, leq, meet_table, join_table, ortho, diagram=diagram)
    logger.debug("Built lattice with %d elements from %d blocks", size, diagram.block_count)

    if verify:
        report = verify_laws(lattice)
        if not report.passed:
            raise LawViolationError(report)

    return lattice


def _subsets(block: tuple[int, ...]) -> Iterator[frozenset[int]]:
    for size in range(len(block) + 1):
        for subset in combinations(block, size):
            yield frozenset(subset)


def _pasting_elements(diagram: GreechieDiagram) -> tuple[list[ElementId], dict[frozenset[int], int]]:
    """Element list in index order and the map from block subsets to indices."""
    count = diagram.atom_count
    elements = [ElementId(kind=ElementKind.ZERO), ElementId(kind=ElementKind.ONE)]
    elements += [ElementId(kind=ElementKind.ATOM, atoms=(atom,)) for atom in range(1, count + 1)]
    elements += [ElementId(kind=ElementKind.COATOM, atoms=(atom,)) for atom in range(1, count + 1)]

    subset_index: dict[frozenset[int], int] = {frozenset(): ZERO_INDEX}
    for block in diagram.blocks:
        full = frozenset(block)
        subset_index[full] = ONE_INDEX
        for atom in block:
            subset_index[frozenset({atom})] = 1 + atom
            subset_index[full - {atom}] = 1 + count + atom

        for pair in combinations(block, 2) if len(block) == 4 else ():
            subset_index[frozenset(pair)] = len(elements)
            elements.append(ElementId(kind=ElementKind.BLOCK_JOIN, atoms=pair))

    return elements, subset_index


def _transitive_closure(leq: BoolTable) -> BoolTable:
    """Warshall closure of a boolean relation."""
    closure = leq.copy()
    for k in range(closure.shape[0]):
        closure |= closure[:, k:k + 1] & closure[k:k + 1, :]

    return closure


def _check_partial_order(leq: BoolTable, labels: Sequence[str]) -> None:
    """Reflexivity, antisymmetry and transitivity of an order matrix."""
    if not leq.diagonal().all():
        raise LatticeConstructionError("order is not reflexive")

    both = leq & leq.T
    np.fill_diagonal(both, False)
    if both.any():
        x, y = np.argwhere(both)[0]
        raise LatticeConstructionError(f"order is not antisymmetric: {labels[x]} and {labels[y]}")

    composed = (leq.astype(np.int64) @ leq.astype(np.int64)) > 0
    if (composed & ~leq).any():
        x, y = np.argwhere(composed & ~leq)[0]
        raise LatticeConstructionError(f"order is not transitive at ({labels[x]}, {labels[y]})")


def _bounds_tables(leq: BoolTable, labels: Sequence[str]) -> tuple[IndexTable, IndexTable]:
    """Meet and join tables from an order, failing on the first pair without one."""
    meet_table = _least_bounds(leq.T, labels, "meet")
    join_table = _least_bounds(leq, labels, "join")
    return meet_table, join_table


def _least_bounds(order: BoolTable, labels: Sequence[str], name: str) -> IndexTable:
    """Least common upper bound of every pair with respect to ``order``.

    For joins ``order`` is ``leq``; for meets it is the dual ``leq.T``.
    """
    size = order.shape[0]
    # upper[x, y, z]: z is an upper bound of x and y
    upper = (order[:, None, :] & order[None, :, :]).reshape(size * size, size)
    # an upper bound z is least when no other upper bound w fails z <= w
    not_below = (~order).T.astype(np.int64)
    blocked = (upper.astype(np.int64) @ not_below) > 0
    least = upper & ~blocked

    counts = least.sum(axis=1)
    if (counts != 1).any():
        flat = int(np.flatnonzero(counts != 1)[0])
        x, y = divmod(flat, size)
        raise NotALatticeError(f"{labels[x]} and {labels[y]} have no unique {name}", pair=(labels[x], labels[y]))

    return least.argmax(axis=1).reshape(size, size).astype(np.intp)
