"""Tower peeling on finite systems and the positive-measure certificate.

Non-heavy atoms are peeled into rows: at each stage the base is every
uncovered atom whose ψ equals the largest remaining ψ <= N, and the row is
the base together with its first ψ - 1 iterates. Each row's f-integral is
strictly negative, so rows that were pairwise disjoint and covered every
atom would force ∫ f dμ < 0. The certificate checks that this never happens.
"""

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction

from heavysift.core.trace import deficit_trace
from heavysift.errors import HorizonError
from heavysift.finite.heavy import psi_table
from heavysift.finite.heavy import restrict_psi
from heavysift.finite.system import FiniteSystem

logger = logging.getLogger(__name__)

ROW_OVERLAP = 'row-overlap'
HEAVY_OVERLAP = 'heavy-overlap'


@dataclass(frozen=True)
class TowerRow:
    """One peeled row A_{j,0}, ..., A_{j,n_j - 1}.

    Attributes:
        base: Atoms of A_{j,0}
        height: n_j, the common ψ of the base atoms
        row_atoms: T^i(b) for i < n_j and b in the base, level by level (a multiset)
        row_sum: Σ_b μ(b) d_{n_j}(b), the f-integral over the row
        base_sums: (b, μ(b) d_{n_j}(b)) per base atom
    """

    base: frozenset[int]
    height: int
    row_atoms: tuple[int, ...]
    row_sum: Fraction
    base_sums: tuple[tuple[int, Fraction], ...]


@dataclass(frozen=True)
class Collision:
    """A row atom that was already covered or lies in H(N)."""

    row: int
    atom: int
    kind: str


@dataclass(frozen=True)
class TowerPartition:
    """Rows peeled through horizon N with their diagnostics."""

    horizon: int
    rows: tuple[TowerRow, ...]
    collisions: tuple[Collision, ...]
    covered: frozenset[int]
    heavy: frozenset[int]
    n: int

    @property
    def heights(self) -> tuple[int, ...]:
        return tuple(row.height for row in self.rows)

    @property
    def pairwise_disjoint(self) -> bool:
        """No atom appears twice across all rows (or twice inside one row)."""
        every_atom = [atom for row in self.rows for atom in row.row_atoms]
        return len(every_atom) == len(set(every_atom))

    @property
    def covers_all(self) -> bool:
        return len(self.covered) == self.n


@dataclass(frozen=True)
class Certificate:
    """Outcome of the positive-measure check for one horizon."""

    horizon: int
    heavy_set: frozenset[int]
    partition: TowerPartition
    heavy_nonempty: bool
    rows_negative: bool
    heights_decreasing: bool
    disjoint_cover: bool

    @property
    def holds(self) -> bool:
        return self.heavy_nonempty and self.rows_negative and self.heights_decreasing and not self.disjoint_cover

    def failures(self) -> list[str]:
        """Human-readable reasons the certificate fails (empty when it holds)."""
        reasons = []
        if not self.heavy_nonempty:
            reasons.append(f'H({self.horizon}) is empty')
        if not self.rows_negative:
            reasons.append('a row sum is not strictly negative')
        if not self.heights_decreasing:
            reasons.append(f'heights {list(self.partition.heights)} are not strictly decreasing')
        if self.disjoint_cover:
            reasons.append('rows are pairwise disjoint and cover every atom')
        return reasons


def greedy_tower_partition(
    system: FiniteSystem,
    horizon: int,
    psi_values: dict[int, int | None] | None = None,
) -> TowerPartition:
    """Peel the non-heavy atoms into rows of decreasing height.

    Args:
        system: Finite system (f integrates to 0)
        horizon: N >= 1
        psi_values: Optional ψ table computed through a horizon >= N

    Raises:
        HorizonError: If N < 1
    """
    if horizon < 1:
        raise HorizonError(f'Horizon must be at least 1, got {horizon}')
    table = restrict_psi(psi_values, horizon) if psi_values is not None else psi_table(system, horizon)
    heavy = frozenset(atom for atom, value in table.items() if value is None)
    f = system.observable()

    covered: set[int] = set()
    rows: list[TowerRow] = []
    collisions: list[Collision] = []

    while True:
        remaining = [table[atom] for atom in system.atoms() if atom not in covered and table[atom] is not None]
        if not remaining:
            break
        height = max(value for value in remaining if value is not None)
        base = frozenset(atom for atom in system.atoms() if atom not in covered and table[atom] == height)

        row_atoms = []
        for level in range(height):
            for atom in sorted(base):
                image = system.orbit(atom, level + 1)[-1]
                row_atoms.append(image)

        row_index = len(rows)
        for atom in row_atoms:
            if atom in covered:
                collisions.append(Collision(row_index, atom, ROW_OVERLAP))
            if atom in heavy:
                collisions.append(Collision(row_index, atom, HEAVY_OVERLAP))
            covered.add(atom)

        base_sums = tuple((atom, system.weights[atom] * deficit_trace(system, atom, f, height).at(height)) for atom in sorted(base))
        rows.append(
            TowerRow(
                base=base,
                height=height,
                row_atoms=tuple(row_atoms),
                row_sum=sum((value for _, value in base_sums), Fraction(0)),
                base_sums=base_sums,
            )
        )

    logger.debug('Peeled %d rows with heights %s through N=%d', len(rows), [row.height for row in rows], horizon)
    return TowerPartition(horizon, tuple(rows), tuple(collisions), frozenset(covered), heavy, system.n)


def certify_positive_measure(
    system: FiniteSystem,
    horizon: int,
    psi_values: dict[int, int | None] | None = None,
) -> Certificate:
    """Certify that H(N) has positive measure, exercising the peeling argument.

    Checks that H(N) is nonempty, every row sum is strictly negative, heights
    strictly decrease, and the rows are not simultaneously pairwise disjoint
    and covering.
    """
    partition = greedy_tower_partition(system, horizon, psi_values)
    heights = partition.heights
    return Certificate(
        horizon=horizon,
        heavy_set=partition.heavy,
        partition=partition,
        heavy_nonempty=bool(partition.heavy),
        rows_negative=all(row.row_sum < 0 for row in partition.rows),
        heights_decreasing=all(later < earlier for earlier, later in itertools.pairwise(heights)),
        disjoint_cover=partition.pairwise_disjoint and partition.covers_all,
    )
