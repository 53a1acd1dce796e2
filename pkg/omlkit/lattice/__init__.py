"""Greechie diagrams and the finite orthomodular lattices they paste into."""

# Local
from omlkit.lattice.greechie import parse_diagram, read_diagram_file, serialize_diagram
from omlkit.lattice.laws import verify_laws
from omlkit.lattice.oml import OmlLattice, build_lattice

__all__ = [
    "OmlLattice",
    "build_lattice",
    "parse_diagram",
    "read_diagram_file",
    "serialize_diagram",
    "verify_laws",
]
