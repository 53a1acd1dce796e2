"""Unit tests for n-Go, strong-state and MGE verdict models."""

# Standard library
from fractions import Fraction

# Third-party
import pytest
from pydantic import ValidationError

# Local
from omlkit.lattice.oml import OmlLattice
from omlkit.models import (
    CondensedStateEquation,
    NGoOutcome,
    NGoVerdict,
    StateOutcome,
    StateVector,
    StrongSetVerdict,
    WitnessKind,
    WitnessPair,
)


class TestNGoVerdict:
    """Tests for NGoVerdict consistency."""

    @staticmethod
    def test_fails_needs_chain_of_length_n() -> None:
        """Should reject a failing verdict whose chain length differs from n."""
        with pytest.raises(ValidationError, match="chain"):
            NGoVerdict(outcome=NGoOutcome.FAILS, n=4, cutoff=100, chain=("a1", "a2", "a3"))

    @staticmethod
    def test_passes_needs_convergence_stage() -> None:
        """Should reject a passing verdict without a convergence stage."""
        with pytest.raises(ValidationError, match="convergence"):
            NGoVerdict(outcome=NGoOutcome.PASSES, cutoff=100)

    @staticmethod
    def test_inconclusive_is_bare() -> None:
        """Should accept an inconclusive verdict with only the cutoff."""
        assert NGoVerdict(outcome=NGoOutcome.INCONCLUSIVE, cutoff=5).n is None


class TestStateVector:
    """Tests for StateVector extension to all elements."""

    @staticmethod
    def test_values_on_boolean(boolean: OmlLattice) -> None:
        """Should extend atom values through complements."""
        state = StateVector(atom_values={1: "1/2", 2: "1/3", 3: "1/6"})

        assert state.value(boolean, "0") == 0
        assert state.value(boolean, "I") == 1
        assert state.value(boolean, "a2") == Fraction(1, 3)
        assert state.value(boolean, "a1'") == Fraction(1, 2)

    @staticmethod
    def test_block_join_sums_atoms(four_block: OmlLattice) -> None:
        """Should sum atom values of a 4-block join."""
        state = StateVector(atom_values={1: "1/4", 2: "1/4", 3: "1/4", 4: "1/4"})

        assert state.value(four_block, "B:{a1,a2}") == Fraction(1, 2)


class TestStrongSetVerdict:
    """Tests for StrongSetVerdict consistency."""

    @staticmethod
    def test_refutes_needs_problem() -> None:
        """Should reject a refutation without its problem."""
        pair = WitnessPair(x="a1", y="a7'", forced_minimum=1, kind=WitnessKind.INCOMPARABLE)

        with pytest.raises(ValidationError, match="witness pair and its problem"):
            StrongSetVerdict(outcome=StateOutcome.REFUTES, witness=pair)

    @staticmethod
    def test_witness_text() -> None:
        """Should print pairs as (x,y)."""
        pair = WitnessPair(x="a1", y="a7'", forced_minimum=1, kind=WitnessKind.INCOMPARABLE)

        assert str(pair) == "(a1,a7')"


class TestCondensedStateEquation:
    """Tests for condensed state equations."""

    @staticmethod
    def test_balance_and_render() -> None:
        """Should count variables per side and render in + notation."""
        condensed = CondensedStateEquation(
            lhs=(("a", "d"), ("b", "e"), ("c", "f")),
            rhs=(("d", "b"), ("e", "c"), ("f", "a")),
        )

        assert condensed.is_balanced
        assert condensed.render() == "ad+be+cf=db+ec+fa"
        assert condensed.variables == ("a", "d", "b", "e", "c", "f")

    @staticmethod
    def test_unbalanced() -> None:
        """Should detect differing counts."""
        assert not CondensedStateEquation(lhs=(("a", "b"),), rhs=(("a",),)).is_balanced

    @staticmethod
    def test_rejects_repeated_variable_in_term() -> None:
        """Should reject a term repeating a variable."""
        with pytest.raises(ValidationError, match="repeats"):
            CondensedStateEquation(lhs=(("a", "a"),), rhs=(("a",),))

    @staticmethod
    def test_render_atoms_needs_naming() -> None:
        """Should map variables back to atom characters."""
        condensed = CondensedStateEquation(lhs=(("a", "b"),), rhs=(("b", "a"),), naming={4: "a", 10: "b"})

        assert condensed.render_atoms() == "4A=A4"

        with pytest.raises(ValueError, match="naming"):
            CondensedStateEquation(lhs=(("a",),), rhs=(("a",),)).render_atoms()
