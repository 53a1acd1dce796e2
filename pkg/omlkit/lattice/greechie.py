"""Parsing and serialization of Greechie diagrams in compact notation.

A diagram line is a comma-separated list of blocks terminated by ``.``;
each block is 3 or 4 atom characters from ``1-9A-Za-z``::

    123,345,567,789,9AB,BC1,2E8,4FA,6DC,DEF.
"""

# Standard library
from functools import lru_cache
from itertools import combinations
from pathlib import Path

# Third-party
from lark import Lark, Token, Transformer, v_args
from lark.exceptions import UnexpectedCharacters, UnexpectedInput, UnexpectedToken
from pydantic import ValidationError

# Local
from omlkit.config.constants import DIAGRAM_COMMENT_PREFIX, MAX_ATOMS, SUPPORTED_BLOCK_SIZES
from omlkit.errors import DiagramFileError, DiagramParseError
from omlkit.models.diagram import GreechieDiagram, atom_char, atom_number
from omlkit.utils.logging import get_logger

logger = get_logger(__name__)

DIAGRAM_GRAMMAR = r"""
    ?start: diagram

    diagram: block ("," block)* "."
    block: ATOM+

    ATOM: /[1-9A-Za-z]/
"""


@lru_cache(maxsize=1)
def _parser() -> Lark:
    """Shared LALR parser instance."""
    return Lark(DIAGRAM_GRAMMAR, parser="lalr")


@v_args(inline=True)
class _BlockCollector(Transformer):
    """Turns the parse tree into the atom tokens of every block."""

    def block(self, *atoms: Token) -> tuple[Token, ...]:
        return atoms

    def diagram(self, *blocks: tuple[Token, ...]) -> list[tuple[Token, ...]]:
        return list(blocks)


def _syntax_tree(text: str, line_number: int | None) -> list[tuple[Token, ...]]:
    """Run the grammar and translate lark errors into diagram errors."""
    try:
        tree = _parser().parse(text)

    except UnexpectedToken as error:
        if error.token.type == "$END":
            raise DiagramParseError("unterminated diagram (missing '.')", column=len(text) + 1,
                                    line=line_number) from error

        if str(error.token) in ",.":
            raise DiagramParseError("empty block", column=error.column, line=line_number) from error

        raise DiagramParseError(f"unexpected {str(error.token)!r} after the final '.'", column=error.column,
                                line=line_number) from error

    except UnexpectedCharacters as error:
        raise DiagramParseError(f"illegal character {text[error.pos_in_stream]!r}", column=error.column,
                                line=line_number) from error

    except UnexpectedInput as error:
        raise DiagramParseError("malformed diagram", column=getattr(error, "column", None),
                                line=line_number) from error

    return _BlockCollector().transform(tree)


def parse_diagram(line: str, line_number: int | None = None) -> GreechieDiagram:
    """Parse one diagram line.

    Args:
        line: Diagram text; surrounding whitespace is ignored.
        line_number: Source line, attached to errors and to the diagram.

    Returns:
        Parsed diagram with atoms numbered by the character map.

    Raises:
        DiagramParseError: On an unterminated line, an illegal character, a
            block size outside {3, 4}, a repeated atom, a duplicate block,
            blocks sharing two or more atoms, or an unused atom number.

    Examples:
        >>> parse_diagram("123,345.").atom_count
        5
    """
    text = line.strip()
    blocks: list[tuple[int, ...]] = []
    for tokens in _syntax_tree(text, line_number):
        chunk = "".join(tokens)
        atoms: list[int] = []
        for token in tokens:
            atom = atom_number(str(token))
            if atom in atoms:
                raise DiagramParseError(f"atom {str(token)!r} repeated in block {chunk!r}", column=token.column,
                                        line=line_number)
            atoms.append(atom)

        if len(atoms) not in SUPPORTED_BLOCK_SIZES:
            raise DiagramParseError(
                f"block {chunk!r} has size {len(atoms)}; supported sizes are "
                f"{', '.join(map(str, sorted(SUPPORTED_BLOCK_SIZES)))}",
                column=tokens[0].column,
                line=line_number,
            )

        blocks.append(tuple(atoms))

    _check_block_pairs(blocks, line_number)

    atom_count = max(atom for block in blocks for atom in block)
    used = {atom for block in blocks for atom in block}
    unused = [atom_char(atom) for atom in range(1, atom_count + 1) if atom not in used]
    if unused:
        raise DiagramParseError(f"atoms {''.join(unused)} appear in no block", line=line_number)

    try:
        return GreechieDiagram(atom_count=atom_count, blocks=tuple(blocks), source_line=line_number)

    except ValidationError as error:
        raise DiagramParseError(str(error.errors()[0]["msg"]), line=line_number) from error


def _check_block_pairs(blocks: list[tuple[int, ...]], line_number: int | None) -> None:
    """Reject duplicate blocks and blocks sharing two or more atoms."""
    for first, second in combinations(blocks, 2):
        shared = set(first) & set(second)
        if set(first) == set(second):
            raise DiagramParseError(f"duplicate block {_text(first)!r}", line=line_number)

        if len(shared) > 1:
            raise DiagramParseError(
                f"blocks {_text(first)!r} and {_text(second)!r} share {len(shared)} atoms",
                line=line_number,
            )


def _text(block: tuple[int, ...]) -> str:
    return "".join(atom_char(atom) for atom in block)


def serialize_diagram(diagram: GreechieDiagram) -> str:
    """Render a diagram in compact notation, preserving block and atom order.

    Args:
        diagram: Diagram to render.

    Returns:
        Diagram line such as ``"123,345."``.

    Raises:
        ValueError: If the diagram has more atoms than the alphabet holds.
    """
    if diagram.atom_count > MAX_ATOMS:
        raise ValueError(f"{diagram.atom_count} atoms exceed the {MAX_ATOMS}-character alphabet")

    return ",".join(_text(block) for block in diagram.blocks) + "."


def read_diagram_file(path: Path, lenient: bool = False) -> list[GreechieDiagram]:
    """Read one diagram per line; ``#`` comments and blank lines are skipped.

    Args:
        path: Diagram file.
        lenient: Skip malformed lines with a warning instead of failing.

    Returns:
        Diagrams in file order, each tagged with its source line number.

    Raises:
        DiagramFileError: If the file cannot be read, or (strict mode) a line
            does not parse. The message names the offending line.
    """
    try:
        text = path.read_text(encoding="utf-8")

    except OSError as error:
        raise DiagramFileError(f"Cannot read diagram file {path}: {error}") from error

    diagrams: list[GreechieDiagram] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith(DIAGRAM_COMMENT_PREFIX):
            continue

        try:
            diagrams.append(parse_diagram(stripped, line_number=number))

        except DiagramParseError as error:
            if not lenient:
                raise DiagramFileError(f"{path}: {error}", line=number) from error

            logger.warning("Skipping malformed diagram: %s", error)

    logger.debug("Read %d diagrams from %s", len(diagrams), path)
    return diagrams
