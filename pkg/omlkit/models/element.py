"""Lattice element identifiers."""

# Standard library
from typing import Annotated

# Third-party
from pydantic import ConfigDict, Field

# Local
from omlkit.config.constants import ONE_LABEL, ZERO_LABEL, ElementKind
from omlkit.models.base import OmlBaseModel
from omlkit.models.diagram import atom_char


class ElementId(OmlBaseModel):
    """Identity of one element of a pasted lattice.

    Atom complements are identified across blocks, so ``COATOM`` carries
    only the atom number. ``BLOCK_JOIN`` is a proper join of two atoms of a
    4-block that is not an atom complement.

    Attributes:
        kind: Element kind.
        atoms: Atom numbers: ``(k,)`` for atoms and complements, the joined
            atoms for block joins, empty otherwise.
        name: Explicit label for elements of lattices given by an order.

    Examples:
        >>> ElementId(kind=ElementKind.COATOM, atoms=(7,)).label
        "a7'"
    """

    model_config = ConfigDict(frozen=True)

    kind: Annotated[ElementKind, Field(description="Element kind")]
    atoms: Annotated[
        tuple[int, ...],
        Field(default=(), description="Atom numbers defining the element")
    ] = ()
    name: Annotated[
        str | None,
        Field(default=None, description="Explicit label (order-defined lattices)")
    ] = None

    @property
    def label(self) -> str:
        """Stable textual name: ``0``, ``I``, ``aK``, ``aK'`` or ``B:{...}``."""
        if self.name is not None:
            return self.name

        match self.kind:
            case ElementKind.ZERO:
                return ZERO_LABEL
            case ElementKind.ONE:
                return ONE_LABEL
            case ElementKind.ATOM:
                return f"a{self.atoms[0]}"
            case ElementKind.COATOM:
                return f"a{self.atoms[0]}'"
            case _:
                return "B:{" + ",".join(f"a{atom}" for atom in self.atoms) + "}"

    @property
    def compact(self) -> str:
        """Atom-character form used in LP listings (``7``, ``7'``, ``12``)."""
        match self.kind:
            case ElementKind.ATOM:
                return atom_char(self.atoms[0])
            case ElementKind.COATOM:
                return atom_char(self.atoms[0]) + "'"
            case ElementKind.BLOCK_JOIN:
                return "".join(atom_char(atom) for atom in self.atoms)
            case _:
                return self.label

    def __str__(self) -> str:
        return self.label
