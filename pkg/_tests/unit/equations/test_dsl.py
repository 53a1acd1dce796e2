"""Unit tests for the equation grammar, parser and printer."""

# Third-party
import pytest

# Local
from omlkit.config.constants import Operator, Relation
from omlkit.equations import format_equation, format_term, generate_ngo, mayet_e2_condition, parse_equation
from omlkit.errors import EquationSyntaxError, ReservedVariableError
from omlkit.models import BinaryTerm, Complement, Const, Hypothesis, Var
from omlkit.models.equation import imp, join, meet, var


class TestParseEquation:
    """Tests for parse_equation."""

    @staticmethod
    def test_simple_inequality() -> None:
        """Should parse a two-variable inequality."""
        equation = parse_equation("a ^ (a' v b) =< b")

        assert equation.variables == ("a", "b")
        assert equation.relation is Relation.LE
        assert equation.lhs == meet(var("a"), join(Complement(operand=var("a")), var("b")))

    @staticmethod
    def test_meet_binds_tighter_than_join() -> None:
        """Should read a v b ^ c as a v (b ^ c)."""
        assert parse_equation("a v b ^ c = a").lhs == join(var("a"), meet(var("b"), var("c")))

    @staticmethod
    def test_implication_is_right_associative() -> None:
        """Should read a -> b -> c as a -> (b -> c)."""
        assert parse_equation("a -> b -> c = 1").lhs == imp(var("a"), imp(var("b"), var("c")))

    @staticmethod
    def test_join_binds_tighter_than_implication() -> None:
        """Should read a v b -> c as (a v b) -> c."""
        term = parse_equation("a v b -> c = 1").lhs

        assert isinstance(term, BinaryTerm)
        assert term.op is Operator.IMP

    @staticmethod
    def test_constants() -> None:
        """Should parse 0 and 1 as bounds."""
        equation = parse_equation("a ^ 0 = 0")

        assert equation.rhs == Const(value=0)
        assert equation.variables == ("a",)

    @staticmethod
    def test_postfix_complement_stacks() -> None:
        """Should allow repeated complements."""
        assert parse_equation("a'' = a").lhs == Complement(operand=Complement(operand=Var(name="a")))

    @staticmethod
    def test_hypothesis_chain() -> None:
        """Should expand a _|_ d _|_ b into consecutive pairs."""
        equation = parse_equation("a _|_ d _|_ b & c _|_ a |= a = a")

        assert equation.hypotheses == (
            Hypothesis(left="a", right="d"),
            Hypothesis(left="d", right="b"),
            Hypothesis(left="c", right="a"),
        )
        assert equation.variables == ("a", "d", "b", "c")

    @staticmethod
    def test_whitespace_insensitive() -> None:
        """Should ignore whitespace."""
        assert parse_equation("a^b=<a") == parse_equation(" a ^ b  =<  a ")

    @staticmethod
    @pytest.mark.parametrize("text", ["v ^ a = a", "a ^ v = a", "a _|_ v |= a = a"])
    def test_reserved_variable(text: str) -> None:
        """Should refuse v as a variable name."""
        with pytest.raises(ReservedVariableError, match="join operator"):
            parse_equation(text)

    @staticmethod
    def test_unexpected_character_column() -> None:
        """Should report the column of a stray character."""
        with pytest.raises(EquationSyntaxError) as excinfo:
            parse_equation("a # b = a")

        assert excinfo.value.column == 3

    @staticmethod
    @pytest.mark.parametrize("text", ["a ^ = b", "a =", "(a v b = a", "a b = a"])
    def test_malformed(text: str) -> None:
        """Should raise a syntax error on malformed equations."""
        with pytest.raises(EquationSyntaxError, match="unexpected"):
            parse_equation(text)

    @staticmethod
    def test_missing_relation() -> None:
        """Should require a relation."""
        with pytest.raises(EquationSyntaxError):
            parse_equation("a ^ b")


class TestFormatEquation:
    """Tests for the printer."""

    @staticmethod
    @pytest.mark.parametrize(
        "text",
        [
            "a ^ (a' v b) =< b",
            "(a v b)' = a' ^ b'",
            "a -> b -> c = 1",
            "(a -> b) -> c = 1",
            "a _|_ b & b _|_ c |= a v b = c'",
            "a v b ^ c = (a v b) ^ c",
        ],
    )
    def test_prints_parseable_text(text: str) -> None:
        """Should print the minimal parenthesization that parses back."""
        equation = parse_equation(text)

        assert format_equation(equation) == text
        assert parse_equation(format_equation(equation)) == equation

    @staticmethod
    def test_ngo_identity_form() -> None:
        """Should print 3-Go in identity form."""
        assert format_equation(generate_ngo(3)) == "(a -> b) ^ (b -> c) ^ (c -> a) = (c -> b) ^ (b -> a) ^ (a -> c)"

    @staticmethod
    def test_mayet_condition() -> None:
        """Should print hypotheses pairwise before the relation."""
        assert format_equation(mayet_e2_condition()) == (
            "a _|_ b & c _|_ d & a _|_ c |= (a v b) ^ (c v d) =< b v d v (a v c)'"
        )

    @staticmethod
    def test_format_term_complement_of_join() -> None:
        """Should parenthesize complemented compound terms."""
        assert format_term(parse_equation("(a v b)' = a").lhs) == "(a v b)'"
