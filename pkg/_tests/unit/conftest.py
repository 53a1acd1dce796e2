"""Shared fixtures for unit tests.

This file contains fixtures used across multiple test modules.
Module-specific fixtures should be defined in their respective conftest.py files.
"""

# Standard library
from pathlib import Path

# Third-party
import numpy as np
import pytest

# Local
from omlkit.lattice import build_lattice, parse_diagram
from omlkit.lattice.oml import OmlLattice

PETERSON = "123,345,567,789,9AB,BC1,2E8,4FA,6DC,DEF."

ADMITTING_DIAGRAMS = ("123.", "123,345.", "123,345,567.", "123,145.", "1234.", "123,456.")

# Loops of order five and six, and two 4-blocks sharing an atom
LOOP_DIAGRAMS = ("123,345,567,789,9A1.", "123,345,567,789,9AB,BC1.", "1234,4567.", "1234,456,678,89A,AB1.")

ORACLE_DIAGRAMS = (*ADMITTING_DIAGRAMS, *LOOP_DIAGRAMS, PETERSON)


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    """Directory holding the diagram fixture files.

    Returns:
        Path: _tests/fixtures
    """
    return Path(__file__).parent.parent / "fixtures"


@pytest.fixture(scope="session")
def peterson() -> OmlLattice:
    """The 32-element Peterson lattice, law-verified.

    Returns:
        OmlLattice: Lattice pasted from the 10-block Peterson diagram.
    """
    return build_lattice(parse_diagram(PETERSON), verify=True)


@pytest.fixture(scope="session")
def boolean() -> OmlLattice:
    """The Boolean algebra with three atoms.

    Returns:
        OmlLattice: Lattice pasted from "123.".
    """
    return build_lattice(parse_diagram("123."), verify=True)


@pytest.fixture(scope="session")
def four_block() -> OmlLattice:
    """The Boolean algebra with four atoms, pasted from one 4-block.

    Returns:
        OmlLattice: 16-element lattice.
    """
    return build_lattice(parse_diagram("1234."), verify=True)


@pytest.fixture(scope="session")
def admitting_lattices() -> list[OmlLattice]:
    """Small lattices that admit a strong set of states.

    Returns:
        list[OmlLattice]: One lattice per entry of ADMITTING_DIAGRAMS.
    """
    return [build_lattice(parse_diagram(text), verify=True) for text in ADMITTING_DIAGRAMS]


@pytest.fixture(scope="session")
def hexagon() -> OmlLattice:
    """The hexagon O6: an ortholattice that is not orthomodular.

    Elements are 0, I, a, b, a', b' with a < b and b' < a'.

    Returns:
        OmlLattice: Lattice built from its order.
    """
    labels = ["0", "I", "a", "b", "a'", "b'"]
    leq = np.eye(6, dtype=bool)
    leq[0, :] = True
    leq[:, 1] = True
    leq[2, 3] = True  # a < b
    leq[5, 4] = True  # b' < a'
    return OmlLattice.from_order(labels, leq, ortho=[1, 0, 4, 5, 2, 3])


@pytest.fixture(scope="session", params=ORACLE_DIAGRAMS, ids=ORACLE_DIAGRAMS)
def oracle_lattice(request: pytest.FixtureRequest) -> OmlLattice:
    """Each lattice of the cross-check corpus in turn.

    Returns:
        OmlLattice: Lattice pasted from one entry of ORACLE_DIAGRAMS.
    """
    return build_lattice(parse_diagram(request.param), verify=True)


@pytest.fixture(scope="session")
def oracle_lattices() -> list[OmlLattice]:
    """The whole cross-check corpus.

    Returns:
        list[OmlLattice]: One lattice per entry of ORACLE_DIAGRAMS.
    """
    return [build_lattice(parse_diagram(text), verify=True) for text in ORACLE_DIAGRAMS]
