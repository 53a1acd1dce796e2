"""Greechie diagram model.

A diagram is the combinatorial input of every analysis: atoms numbered
from 1 and an ordered list of blocks (maximal Boolean subalgebras).
"""

# Standard library
from itertools import combinations
from typing import Annotated, Self

# Third-party
from pydantic import ConfigDict, Field, model_validator

# Local
from omlkit.config.constants import ATOM_ALPHABET, SUPPORTED_BLOCK_SIZES
from omlkit.models.base import OmlBaseModel

Block = tuple[int, ...]


def atom_char(atom: int) -> str:
    """Return the compact-notation character of a 1-based atom number.

    Args:
        atom: Atom number in 1..61.

    Returns:
        Single character from ``1-9A-Za-z``.

    Raises:
        ValueError: If the atom number is outside the alphabet.

    Examples:
        >>> atom_char(10)
        'A'
    """
    if not 1 <= atom <= len(ATOM_ALPHABET):
        raise ValueError(f"Atom {atom} outside the {len(ATOM_ALPHABET)}-character alphabet")

    return ATOM_ALPHABET[atom - 1]


def atom_number(char: str) -> int:
    """Return the 1-based atom number of a compact-notation character.

    Raises:
        ValueError: If the character is not in the alphabet.
    """
    position = ATOM_ALPHABET.find(char)
    if len(char) != 1 or position < 0:
        raise ValueError(f"Illegal atom character {char!r}")

    return position + 1


class GreechieDiagram(OmlBaseModel):
    """Atoms and blocks of a Greechie diagram.

    Attributes:
        atom_count: Highest atom number; every atom 1..atom_count is used.
        blocks: Ordered blocks, each an ordered tuple of distinct atom numbers.
        source_line: 1-based line of the diagram in its source file, if read from one.

    Examples:
        >>> d = GreechieDiagram(atom_count=3, blocks=((1, 2, 3),))
        >>> d.block_count
        1
    """

    model_config = ConfigDict(frozen=True)

    atom_count: Annotated[
        int,
        Field(ge=1, description="Number of atoms (highest atom index)")
    ]
    blocks: Annotated[
        tuple[Block, ...],
        Field(min_length=1, description="Blocks in input order")
    ]
    source_line: Annotated[
        int | None,
        Field(default=None, ge=1, description="Line number in the source file")
    ] = None

    @model_validator(mode="after")
    def _check_structure(self) -> Self:
        """Enforce block sizes, pairwise intersections and atom coverage."""
        seen: set[frozenset[int]] = set()
        for block in self.blocks:
            if len(block) not in SUPPORTED_BLOCK_SIZES:
                raise ValueError(f"Block {block} has unsupported size {len(block)}")

            if len(set(block)) != len(block):
                raise ValueError(f"Block {block} repeats an atom")

            if any(not 1 <= atom <= self.atom_count for atom in block):
                raise ValueError(f"Block {block} references an atom outside 1..{self.atom_count}")

            key = frozenset(block)
            if key in seen:
                raise ValueError(f"Block {block} is a duplicate")
            seen.add(key)

        for first, second in combinations(self.blocks, 2):
            if len(set(first) & set(second)) > 1:
                raise ValueError(f"Blocks {first} and {second} share more than one atom")

        used = {atom for block in self.blocks for atom in block}
        missing = sorted(set(range(1, self.atom_count + 1)) - used)
        if missing:
            raise ValueError(f"Atoms {missing} appear in no block")

        return self

    @property
    def block_count(self) -> int:
        """Number of blocks."""
        return len(self.blocks)

    @property
    def atoms(self) -> range:
        """Atom numbers 1..atom_count."""
        return range(1, self.atom_count + 1)

    def blocks_containing(self, atom: int) -> tuple[Block, ...]:
        """Blocks that contain the given atom, in input order."""
        return tuple(block for block in self.blocks if atom in block)

    def canonical(self) -> "GreechieDiagram":
        """Return the diagram with atoms sorted inside blocks and blocks sorted.

        Two diagrams that differ only in block or atom ordering have equal
        canonical forms.
        """
        blocks = tuple(sorted(tuple(sorted(block)) for block in self.blocks))
        return GreechieDiagram(atom_count=self.atom_count, blocks=blocks, source_line=self.source_line)

    def block_text(self, block: Block) -> str:
        """Render one block in compact notation (``"2E8"``)."""
        return "".join(atom_char(atom) for atom in block)
