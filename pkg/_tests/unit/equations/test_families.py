"""Unit tests for the named equation families."""

# Third-party
import pytest

# Local
from omlkit.config.constants import Relation
from omlkit.equations import check_equation, generate_ngo, generate_ngo_implicational, godowski_identity
from omlkit.equations.dsl import format_term
from omlkit.equations.families import chain_variables
from omlkit.lattice.oml import OmlLattice


class TestChainVariables:
    """Tests for chain variable naming."""

    @staticmethod
    def test_letters_skip_v() -> None:
        """Should use single letters without v."""
        assert chain_variables(3) == ("a", "b", "c")
        assert "v" not in chain_variables(30)

    @staticmethod
    def test_long_chains_use_indexed_names() -> None:
        """Should fall back to x1..xn past the alphabet."""
        names = chain_variables(60)

        assert names[0] == "x1"
        assert names[-1] == "x60"


class TestGenerators:
    """Tests for n-Go generators."""

    @staticmethod
    def test_identity_chain() -> None:
        """Should close the implication cycle."""
        assert format_term(godowski_identity(("a", "b", "c", "d"))) == "(a -> b) ^ (b -> c) ^ (c -> d) ^ (d -> a)"

    @staticmethod
    def test_identity_form_shape() -> None:
        """Should equate the chain with its reverse."""
        equation = generate_ngo(4)

        assert equation.relation is Relation.EQ
        assert equation.variables == ("a", "b", "c", "d")
        assert format_term(equation.rhs) == "(d -> c) ^ (c -> b) ^ (b -> a) ^ (a -> d)"

    @staticmethod
    def test_implicational_form_shape() -> None:
        """Should bound the chain by a1 -> an."""
        equation = generate_ngo_implicational(3)

        assert equation.relation is Relation.LE
        assert format_term(equation.rhs) == "a -> c"

    @staticmethod
    @pytest.mark.parametrize("generator", [generate_ngo, generate_ngo_implicational])
    def test_rejects_short_chains(generator) -> None:
        """Should require n >= 3."""
        with pytest.raises(ValueError, match="n >= 3"):
            generator(2)

    @staticmethod
    @pytest.mark.parametrize("n", [3, 4])
    def test_both_forms_agree(peterson: OmlLattice, boolean: OmlLattice, n: int) -> None:
        """Should give the same verdict in identity and implicational form."""
        for lattice in (peterson, boolean):
            identity = check_equation(lattice, generate_ngo(n))
            implicational = check_equation(lattice, generate_ngo_implicational(n))

            assert identity.verdict is implicational.verdict
