"""Dynamic-programming scan for the first n at which n-Go fails.

Stage k holds, for every ordered pair (a1, y), the set V_k(a1, y) of values
``(a1 -> a2) ^ ... ^ (ak -> y)`` over all chains of k + 1 elements. The
family is a boolean array indexed ``[a1, y, value]``. Stage k decides n-Go
for n = k + 1: it fails iff some v in V_k(a1, an) has
``v ^ (an -> a1) =/< a1 -> an``.

Taking x = y in the step adds ``v ^ 1``, so V_k is contained in V_{k+1};
the family grows until it stops changing, and once it stops every larger
n passes.
"""

# Standard library
from dataclasses import dataclass

# Third-party
import numpy as np
from numpy.typing import NDArray

# Local
from omlkit.config.settings import get_settings
from omlkit.equations.checker import evaluate_at
from omlkit.equations.families import generate_ngo_implicational
from omlkit.errors import InternalConsistencyError
from omlkit.lattice.oml import OmlLattice
from omlkit.models.verdicts import NGoOutcome, NGoVerdict
from omlkit.utils.logging import StageLogger

log = StageLogger("godowski")

Family = NDArray[np.bool_]


@dataclass(frozen=True)
class FailingMember:
    """Member v of V_k(a1, an) violating the n-Go answer predicate."""

    first: int
    last: int
    value: int
    stage: int

    @property
    def n(self) -> int:
        """Chain length tested at this stage."""
        return self.stage + 1


class GodowskiScanner:
    """Stage-by-stage valuation families of one lattice.

    Each member records the stage it first appeared at and one predecessor:
    at stage 2 the middle element a2, later the code ``x * size + v`` of the
    member of V_{k-1}(a1, x) it was extended from.

    Examples:
        >>> scanner = GodowskiScanner(lattice)
        >>> scanner.initial_family()
        >>> scanner.answer()  # None while n = 3 holds
    """

    def __init__(self, lattice: OmlLattice) -> None:
        self.lattice = lattice
        size = lattice.size
        self._meet = lattice.meet_table
        self._imp = lattice.imp_table
        self.stage = 0
        self.family: Family = np.zeros((size, size, size), dtype=bool)
        self.born = np.zeros((size, size, size), dtype=np.int16)
        self.links = np.full((size, size, size), -1, dtype=np.int32)
        self.operations: list[int] = []
        self.sizes: list[int] = []

        # Violations of the answer predicate do not depend on the stage
        values = np.arange(size)
        closing = self._meet[values[None, None, :], self._imp.T[:, :, None]]
        self._violations: Family = ~lattice.leq_table[closing, self._imp[:, :, None]]

    def initial_family(self) -> Family:
        """Build V_2(a1, a3) = {(a1 -> a2) ^ (a2 -> a3) : a2 in L}."""
        size = self.lattice.size
        values = self._meet[self._imp[:, :, None], self._imp[None, :, :]]  # [a1, a2, a3]
        first = np.arange(size)[:, None, None]
        last = np.arange(size)[None, None, :]
        middle = np.broadcast_to(np.arange(size)[None, :, None], values.shape)

        self.family[:] = False
        self.family[first, last, values] = True
        self.links[first, last, values] = middle
        self.born[self.family] = 2
        self.stage = 2
        self.operations = [size ** 3]
        self.sizes = [int(self.family.sum())]
        log.debug("Stage %s built", 2, members=self.sizes[-1])
        return self.family

    def step(self) -> Family:
        """Advance to V_{k+1}(a1, y) = {v ^ (x -> y) : v in V_k(a1, x)}.

        Returns:
            The new family (also stored on the scanner).
        """
        if self.stage < 2:
            raise InternalConsistencyError("initial_family() must run before step()")

        size = self.lattice.size
        targets = np.arange(size)[None, :]
        following = np.zeros_like(self.family)
        operations = 0
        stage = self.stage + 1

        for a1 in range(size):
            xs, vs = np.nonzero(self.family[a1])
            values = self._meet[vs[:, None], self._imp[xs, :]]  # [member, y]
            operations += values.size

            row = following[a1]
            row[np.broadcast_to(targets, values.shape), values] = True

            fresh = row & ~self.family[a1]
            if fresh.any():
                codes = np.full((size, size), -1, dtype=np.int32)
                codes[np.broadcast_to(targets, values.shape), values] = (xs * size + vs)[:, None]
                self.links[a1][fresh] = codes[fresh]
                self.born[a1][fresh] = stage

        self.family = following
        self.stage = stage
        self.operations.append(operations)
        self.sizes.append(int(following.sum()))
        log.debug("Stage %s built", stage, members=self.sizes[-1], operations=operations)
        return following

    def answer(self) -> FailingMember | None:
        """First (a1, an, v) in index order that breaks n-Go at the current stage."""
        failing = np.argwhere(self.family & self._violations)
        if failing.size == 0:
            return None

        first, last, value = (int(i) for i in failing[0])
        return FailingMember(first=first, last=last, value=value, stage=self.stage)

    def chain(self, member: FailingMember) -> tuple[int, ...]:
        """Chain a1..an of the member's stage whose implications meet to its value.

        Shorter chains from earlier stages are padded by repeating the last
        element, since ``an -> an = 1``.
        """
        size = self.lattice.size
        first, last, value = member.first, member.last, member.value
        tail: list[int] = []

        while True:
            born = int(self.born[first, last, value])
            link = int(self.links[first, last, value])
            if born < 2 or link < 0:
                raise InternalConsistencyError(f"no predecessor recorded for ({first}, {last}, {value})")

            tail.append(last)
            if born == 2:
                tail.append(link)
                break

            last, value = divmod(link, size)

        path = [first, *reversed(tail)]
        return tuple(path + [path[-1]] * (member.n - len(path)))


def reconstruct_witness(scanner: GodowskiScanner, member: FailingMember) -> tuple[str, ...]:
    """Recover a falsifying chain and replay it on the implicational n-Go.

    Args:
        scanner: Scanner whose current stage produced ``member``.
        member: Failing member reported by ``answer()``.

    Returns:
        Labels of a1..an.

    Raises:
        InternalConsistencyError: If the replay does not falsify n-Go.
    """
    lattice = scanner.lattice
    chain = scanner.chain(member)
    equation = generate_ngo_implicational(member.n)
    assignment = dict(zip(equation.variables, chain, strict=True))
    hypotheses, relation = evaluate_at(lattice, equation, assignment)
    if not hypotheses or relation is not False:
        raise InternalConsistencyError(f"{member.n}-Go chain {chain} does not replay as a failure")

    return tuple(lattice.label(i) for i in chain)


def ngo_scan(lattice: OmlLattice, cutoff: int | None = None) -> NGoVerdict:
    """Find the first failing n-Go, certify that all hold, or give up at the cutoff.

    Args:
        lattice: Built, law-verified OML.
        cutoff: Largest n tested (defaults to the ``ngo_cutoff`` setting).

    Returns:
        ``fails`` with n and a replayed chain, ``passes`` with the stage whose
        family equals the next one, or ``inconclusive``.

    Examples:
        >>> ngo_scan(build_lattice(parse_diagram("123."))).outcome
        <NGoOutcome.PASSES: 'passes'>
    """
    cutoff = get_settings().ngo_cutoff if cutoff is None else cutoff
    scanner = GodowskiScanner(lattice)
    scanner.initial_family()

    def verdict(outcome: NGoOutcome, **fields: object) -> NGoVerdict:
        return NGoVerdict(
            outcome=outcome,
            cutoff=cutoff,
            stage_operations=tuple(scanner.operations),
            stage_sizes=tuple(scanner.sizes),
            **fields,
        )

    while True:
        member = scanner.answer()
        if member is not None:
            chain = reconstruct_witness(scanner, member)
            log.info("n-Go fails", n=member.n, elements=lattice.size)
            return verdict(NGoOutcome.FAILS, n=member.n, chain=chain)

        previous = scanner.family
        stage = scanner.stage
        scanner.step()
        if np.array_equal(previous, scanner.family):
            log.info("Families converged", stage=stage, elements=lattice.size)
            return verdict(NGoOutcome.PASSES, converged_at=stage)

        if scanner.stage + 1 > cutoff:
            log.warning("n-Go scan reached the cutoff", cutoff=cutoff, elements=lattice.size)
            return verdict(NGoOutcome.INCONCLUSIVE)
