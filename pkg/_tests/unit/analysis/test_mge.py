"""Unit tests for MGE synthesis."""

# Third-party
import pytest

# Local
from omlkit.analysis.mge import (
    _balance,
    build_condensed,
    generate_mge,
    mge_from_condensed,
    minimize_constraints,
    parse_condensed,
)
from omlkit.analysis.simplex import print_problem, solve
from omlkit.analysis.states import pair_problem, strong_state_verdict
from omlkit.config.constants import Relation
from omlkit.equations import check_equation, evaluate_at, format_equation
from omlkit.errors import (
    BalancingError,
    EquationSyntaxError,
    MgeGenerationError,
    ReservedVariableError,
    UnbalancedEquationError,
)
from omlkit.lattice.oml import OmlLattice
from omlkit.models.lp import LpProblem, LpStatus
from omlkit.models.verdicts import WitnessKind, WitnessPair

WEAKENED = ("123", "567", "789", "BC1", "4FA", "DEF")
KEPT = ("345", "9AB", "2E8", "6DC")

WEAKENED_LISTING = [
    "min: m7';",
    "m1 = 1;",
    "m7 + m7' = 1;",
    "m1 + m2 + m3 <= 1;",
    "m3 + m4 + m5 = 1;",
    "m5 + m6 + m7 <= 1;",
    "m7 + m8 + m9 <= 1;",
    "m9 + mA + mB = 1;",
    "mB + mC + m1 <= 1;",
    "m2 + mE + m8 = 1;",
    "m4 + mF + mA <= 1;",
    "m6 + mD + mC = 1;",
    "mD + mE + mF <= 1;",
]


@pytest.fixture(scope="module")
def peterson_pair() -> WitnessPair:
    """First refuting pair of the Peterson lattice."""
    return WitnessPair(x="a1", y="a7'", forced_minimum=1, kind=WitnessKind.INCOMPARABLE)


class TestMinimizeConstraints:
    """Tests for the greedy block relaxation."""

    @staticmethod
    def test_peterson_split(peterson: OmlLattice) -> None:
        """Should relax six blocks and keep four."""
        weakened, kept, final = minimize_constraints(pair_problem(peterson, "a1", "a7'"))

        assert weakened == WEAKENED
        assert kept == KEPT
        assert solve(final).value == 1

    @staticmethod
    def test_final_problem_relations(peterson: OmlLattice) -> None:
        """Should mark exactly the weakened blocks as <=."""
        _, _, final = minimize_constraints(pair_problem(peterson, "a1", "a7'"))

        relaxed = {c.label for c in final.constraints if c.relation is Relation.LE}
        assert relaxed == {f"block:{block}" for block in WEAKENED}

    @staticmethod
    def test_weakened_listing(peterson: OmlLattice) -> None:
        """Should print the weakened blocks with <=."""
        _, _, final = minimize_constraints(pair_problem(peterson, "a1", "a7'"))

        assert print_problem(final).splitlines() == WEAKENED_LISTING

    @staticmethod
    def test_seeded_order_still_solves_to_one(peterson: OmlLattice) -> None:
        """Should end on a problem that still forces the pair for any order."""
        weakened, kept, final = minimize_constraints(pair_problem(peterson, "a1", "a7'"), seed=7)

        assert solve(final).value == 1
        assert len(weakened) + len(kept) == 10

    @staticmethod
    def test_rejects_pairs_below_one(peterson: OmlLattice) -> None:
        """Should need a base problem whose optimum is 1."""
        assert solve(pair_problem(peterson, "a1", "a2")).status is LpStatus.OPTIMAL

        with pytest.raises(MgeGenerationError):
            minimize_constraints(pair_problem(peterson, "a1", "a2"))


class TestBuildCondensed:
    """Tests for the condensed state equation."""

    @staticmethod
    def test_peterson(peterson: OmlLattice, peterson_pair: WitnessPair) -> None:
        """Should name atoms in first-occurrence order."""
        condensed = build_condensed(peterson, peterson_pair, KEPT, WEAKENED)

        assert condensed.render() == "ab+cd+ef+gh=bg+fc+ad+he"
        assert condensed.render_atoms() == "45+9A+E8+6D=56+89+4A+DE"
        assert condensed.is_balanced
        assert condensed.singletons == ()

    @staticmethod
    def test_needs_pasted_lattice(hexagon: OmlLattice, peterson_pair: WitnessPair) -> None:
        """Should refuse lattices without a diagram."""
        with pytest.raises(MgeGenerationError, match="pasted"):
            build_condensed(hexagon, peterson_pair, KEPT, WEAKENED)

    @staticmethod
    def test_empty_right_side(peterson: OmlLattice, peterson_pair: WitnessPair) -> None:
        """Should fail when no weakened block meets the left-hand atoms."""
        with pytest.raises(MgeGenerationError, match="right-hand"):
            build_condensed(peterson, peterson_pair, ("345",), ("DEF",))


class TestBalance:
    """Tests for term balancing."""

    @staticmethod
    def test_balanced_input_unchanged() -> None:
        """Should leave balanced sides alone."""
        lhs, rhs = _balance([("a", "b")], [("b", "a")])

        assert lhs == [("a", "b")]
        assert rhs == [("b", "a")]

    @staticmethod
    def test_reports_diagnostics() -> None:
        """Should carry the counts when no term can be repeated."""
        with pytest.raises(BalancingError) as excinfo:
            _balance([("a",)], [("b",)])

        assert excinfo.value.diagnostics["lhs_terms"] == 1
        assert excinfo.value.diagnostics["lhs_counts"] == {"a": 1}


class TestParseCondensed:
    """Tests for the condensed notation parser."""

    @staticmethod
    def test_terms() -> None:
        """Should split terms into variables."""
        condensed = parse_condensed("ad + be + cf = db + ec + fa")

        assert condensed.lhs == (("a", "d"), ("b", "e"), ("c", "f"))
        assert condensed.rhs == (("d", "b"), ("e", "c"), ("f", "a"))
        assert condensed.naming == {}

    @staticmethod
    @pytest.mark.parametrize("text", ["ab=cd=ef", "ab", "a+=b", "a1=b", "aa=a"])
    def test_malformed(text: str) -> None:
        """Should reject malformed condensed equations."""
        with pytest.raises(EquationSyntaxError):
            parse_condensed(text)

    @staticmethod
    def test_reserved_variable() -> None:
        """Should refuse v as a variable."""
        with pytest.raises(ReservedVariableError):
            parse_condensed("av=va")


class TestMgeFromCondensed:
    """Tests for the expansion into an MGE."""

    @staticmethod
    def test_singletons() -> None:
        """Should turn singleton terms into a meet of variables."""
        assert format_equation(mge_from_condensed(parse_condensed("a+b=b+a"))) == "a ^ b = b ^ a"

    @staticmethod
    def test_hypotheses_from_terms() -> None:
        """Should make variables sharing a term orthogonal, once per pair."""
        equation = mge_from_condensed(parse_condensed("ab+cd=ba+dc"))

        assert format_equation(equation) == "a _|_ b & c _|_ d |= (a v b) ^ (c v d) = (b v a) ^ (d v c)"

    @staticmethod
    def test_unbalanced() -> None:
        """Should refuse unbalanced equations."""
        with pytest.raises(UnbalancedEquationError):
            mge_from_condensed(parse_condensed("ab=a"))

    @staticmethod
    def test_known_equation_holds_on_boolean(boolean: OmlLattice) -> None:
        """Should give an equation valid in a Boolean algebra."""
        equation = mge_from_condensed(parse_condensed("ad+be+cf=db+ec+fa"))

        assert check_equation(boolean, equation).holds


class TestGenerateMge:
    """Tests for the full synthesis."""

    @staticmethod
    def test_peterson(peterson: OmlLattice) -> None:
        """Should synthesize the known MGE with its witness assignment."""
        result = generate_mge(peterson, source="L1")

        assert result.source == "L1"
        assert str(result.pair) == "(a1,a7')"
        assert result.weakened == WEAKENED
        assert result.kept == KEPT
        assert result.condensed.render() == "ab+cd+ef+gh=bg+fc+ad+he"
        assert result.witness_assignment == {
            "a": "a4", "b": "a5", "c": "a9", "d": "a10",
            "e": "a14", "f": "a8", "g": "a6", "h": "a13",
        }
        assert evaluate_at(peterson, result.mge, result.witness_assignment) == (True, False)
        assert result.corpus_checks == {}

    @staticmethod
    def test_reuses_verdict(peterson: OmlLattice) -> None:
        """Should accept a precomputed strong-state verdict."""
        verdict = strong_state_verdict(peterson)

        assert generate_mge(peterson, verdict=verdict).condensed.render() == "ab+cd+ef+gh=bg+fc+ad+he"

    @staticmethod
    def test_admitting_lattice(boolean: OmlLattice) -> None:
        """Should refuse lattices that admit strong states."""
        with pytest.raises(MgeGenerationError, match="admits"):
            generate_mge(boolean)

    @staticmethod
    @pytest.mark.slow
    def test_holds_on_corpus(peterson: OmlLattice, boolean: OmlLattice, four_block: OmlLattice) -> None:
        """Should check the MGE on every corpus lattice."""
        result = generate_mge(peterson, corpus=[("L2", boolean), ("L3", four_block)])

        assert set(result.corpus_checks) == {"L2", "L3"}
        assert all(verdict.value == "holds" for verdict in result.corpus_checks.values())


def _tightened(problem: LpProblem, label: str) -> LpProblem:
    """Restore one relaxed constraint to an equality."""
    constraints = tuple(
        c.model_copy(update={"relation": Relation.EQ}) if c.label == label else c for c in problem.constraints
    )
    return problem.model_copy(update={"constraints": constraints})


class TestWeakeningMinimality:
    """Replays of the greedy relaxation on its own result."""

    @staticmethod
    @pytest.mark.parametrize("seed", [None, 7])
    def test_each_kept_block_is_needed(peterson: OmlLattice, seed: int | None) -> None:
        """Should drop the optimum below 1 when any one more kept block is relaxed."""
        _, kept, final = minimize_constraints(pair_problem(peterson, "a1", "a7'"), seed=seed)

        for block in kept:
            outcome = solve(final.relax(f"block:{block}"))
            assert outcome.status is LpStatus.OPTIMAL
            assert outcome.value < 1

    @staticmethod
    def test_tightening_keeps_optimum(peterson: OmlLattice) -> None:
        """Should still solve to 1 when a weakened block is restored."""
        weakened, _, final = minimize_constraints(pair_problem(peterson, "a1", "a7'"))

        for block in weakened:
            assert solve(_tightened(final, f"block:{block}")).value == 1

    @staticmethod
    def test_admitting_lattice_has_nothing_to_weaken(admitting_lattices: list[OmlLattice]) -> None:
        """Should refuse every incomparable pair of a lattice that admits strong states."""
        lattice = admitting_lattices[1]

        for x, y in lattice.incomparable_pairs():
            with pytest.raises(MgeGenerationError):
                minimize_constraints(pair_problem(lattice, x, y))
