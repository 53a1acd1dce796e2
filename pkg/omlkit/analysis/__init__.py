"""Lattice analyses: n-Go scan, exact simplex, strong states and MGE synthesis.

Exports:
    Strategy interface:
        - LatticeAnalysis: Interface for per-lattice batch analyses

    Concrete analyses:
        - ParseAnalysis, LawsAnalysis, CheckAnalysis, NgoAnalysis,
          StatesAnalysis, LpDumpAnalysis, MgeAnalysis

    Algorithms:
        - ngo_scan / GodowskiScanner: First failing n-Go by dynamic programming
        - solve / print_problem: Exact two-phase simplex and its text format
        - strong_state_verdict / pair_problem: Strong sets of states
        - generate_mge and its stages: Mayet-Godowski equation synthesis
"""

# Local
from omlkit.analysis.analyses import (
    CheckAnalysis,
    LawsAnalysis,
    LpDumpAnalysis,
    MgeAnalysis,
    NgoAnalysis,
    ParseAnalysis,
    StatesAnalysis,
)

from omlkit.analysis.godowski import GodowskiScanner, ngo_scan, reconstruct_witness

from omlkit.analysis.mge import (
    build_condensed,
    generate_mge,
    mge_from_condensed,
    minimize_constraints,
    parse_condensed,
)

from omlkit.analysis.simplex import format_linear, print_problem, solve

from omlkit.analysis.states import (
    block_constraints,
    pair_problem,
    state_violations,
    strong_state_verdict,
)

from omlkit.analysis.strategy import LatticeAnalysis

__all__ = [
    # Strategy interface
    "LatticeAnalysis",
    # Concrete analyses
    "CheckAnalysis",
    "LawsAnalysis",
    "LpDumpAnalysis",
    "MgeAnalysis",
    "NgoAnalysis",
    "ParseAnalysis",
    "StatesAnalysis",
    # n-Go
    "GodowskiScanner",
    "ngo_scan",
    "reconstruct_witness",
    # Simplex
    "format_linear",
    "print_problem",
    "solve",
    # States
    "block_constraints",
    "pair_problem",
    "state_violations",
    "strong_state_verdict",
    # MGE
    "build_condensed",
    "generate_mge",
    "mge_from_condensed",
    "minimize_constraints",
    "parse_condensed",
]
