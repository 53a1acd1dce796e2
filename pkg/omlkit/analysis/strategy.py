"""Strategy interface for per-lattice analyses.

Each batch subcommand is one ``LatticeAnalysis``: the batch runner parses
and builds every lattice of a file, hands it to the strategy, and collects
the returned reports in input order.
"""

# Standard library
from abc import ABC, abstractmethod

# Local
from omlkit.lattice.oml import OmlLattice, build_lattice
from omlkit.models.diagram import GreechieDiagram
from omlkit.models.run import LatticeReport


class LatticeAnalysis(ABC):
    """Abstract strategy run on every lattice of a batch."""

    @abstractmethod
    def analyze(self, line: int, diagram: GreechieDiagram, lattice: OmlLattice) -> LatticeReport:
        """Analyze one lattice.

        Args:
            line: Source line of the diagram.
            diagram: Parsed diagram.
            lattice: Lattice built from the diagram.

        Returns:
            The lattice's report.
        """
        ...

    @abstractmethod
    def get_name(self) -> str:
        """Get the name of this analysis.

        Returns:
            Subcommand name for logging and reports
        """
        ...

    def build(self, diagram: GreechieDiagram, verify: bool) -> OmlLattice:
        """Build the lattice this analysis runs on (override to change verification).

        Raises:
            LatticeConstructionError: If the pasting is not a (law-abiding) lattice.
        """
        return build_lattice(diagram, verify=verify)
