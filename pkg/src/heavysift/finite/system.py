"""Finite invertible measure-preserving systems with exact rational data.

A FiniteSystem bundles the permutation T, the weights μ and the observable
values f. Construction enforces that T preserves μ and that ∫ f dμ = 0, so
every computation downstream runs in exact arithmetic.
"""

import tomllib
from dataclasses import dataclass
from dataclasses import field
from fractions import Fraction
from pathlib import Path
from typing import Any
from typing import ClassVar

import numpy as np
import tomli_w

from heavysift.core.observables import TableObservable
from heavysift.errors import InvalidSystemError
from heavysift.errors import SpecParseError
from heavysift.systems.base import DynamicalSystem
from heavysift.utils.numbers import Number
from heavysift.utils.numbers import is_exact


@dataclass(frozen=True)
class FiniteSystem(DynamicalSystem):
    """Weighted atoms 0..n-1 permuted by ``perm``.

    Attributes:
        perm: perm[i] = T(i)
        weights: μ({i}), positive and summing to 1
        f_values: f(i), with Σ weights[i] * f_values[i] = 0
    """

    perm: tuple[int, ...]
    weights: tuple[Fraction, ...]
    f_values: tuple[Fraction, ...]
    _inverse: tuple[int, ...] = field(init=False, repr=False, compare=False)

    domain: ClassVar[str] = 'finite'
    invertible: ClassVar[bool] = True

    def __post_init__(self) -> None:
        n = len(self.perm)
        if n < 1:
            raise InvalidSystemError('A finite system needs at least one atom')
        if sorted(self.perm) != list(range(n)):
            raise InvalidSystemError(f'perm {list(self.perm)} is not a bijection of 0..{n - 1}')
        if len(self.weights) != n or len(self.f_values) != n:
            raise InvalidSystemError(f'Expected {n} weights and f-values, got {len(self.weights)} and {len(self.f_values)}')
        if not all(is_exact(value) for value in (*self.weights, *self.f_values)):
            raise InvalidSystemError('Weights and f-values must be exact rationals')

        weights = tuple(Fraction(w) for w in self.weights)
        f_values = tuple(Fraction(v) for v in self.f_values)
        if any(w <= 0 for w in weights):
            raise InvalidSystemError('Weights must be positive')
        if sum(weights) != 1:
            raise InvalidSystemError(f'Weights sum to {sum(weights)}, not 1')
        if any(weights[self.perm[i]] != weights[i] for i in range(n)):
            raise InvalidSystemError('Weights are not invariant under perm, so T does not preserve the measure')
        mean = sum(w * v for w, v in zip(weights, f_values, strict=True))
        if mean != 0:
            raise InvalidSystemError(f'f must integrate to 0, got {mean}')

        inverse = [0] * n
        for atom, image in enumerate(self.perm):
            inverse[image] = atom

        object.__setattr__(self, 'perm', tuple(self.perm))
        object.__setattr__(self, 'weights', weights)
        object.__setattr__(self, 'f_values', f_values)
        object.__setattr__(self, '_inverse', tuple(inverse))

    @property
    def n(self) -> int:
        """Number of atoms."""
        return len(self.perm)

    @property
    def exact(self) -> bool:
        return True

    def step(self, point: Any) -> int:
        return self.perm[point]

    def inverse_step(self, point: Any) -> int:
        return self._inverse[point]

    def contains(self, point: Any) -> bool:
        return isinstance(point, int) and not isinstance(point, bool) and 0 <= point < self.n

    def atoms(self) -> range:
        return range(self.n)

    def observable(self) -> TableObservable:
        """f as a table observable (mean 0)."""
        return TableObservable(self.f_values, self.weights)

    def measure(self, atoms: set[int] | frozenset[int]) -> Fraction:
        """μ of a set of atoms."""
        return sum((self.weights[atom] for atom in atoms), Fraction(0))

    def cycles(self) -> list[tuple[int, ...]]:
        """Cycles of perm, each starting at its smallest atom, ordered by that atom."""
        seen: set[int] = set()
        found = []
        for start in range(self.n):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            current = self.perm[start]
            while current != start:
                cycle.append(current)
                seen.add(current)
                current = self.perm[current]
            found.append(tuple(cycle))
        return found

    def is_ergodic(self) -> bool:
        """A finite system is ergodic exactly when perm is a single cycle."""
        return len(self.cycles()) == 1

    def reverse(self) -> 'FiniteSystem':
        """T^{-1} with the same weights and f-values."""
        return FiniteSystem(self._inverse, self.weights, self.f_values)

    def describe(self) -> str:
        return f'finite system on {self.n} atoms'

    @classmethod
    def from_cycles(cls, cycle_values: list[list[Number]]) -> 'FiniteSystem':
        """Disjoint cycles with uniform weights.

        Atoms are numbered consecutively; a cycle [v0, v1, ..., vl] occupies
        atoms a..a+l with a -> a+1 -> ... -> a+l -> a and f-values v0..vl.

        Raises:
            InvalidSystemError: If a cycle is empty or the f-values do not sum to 0
        """
        perm: list[int] = []
        f_values: list[Fraction] = []
        for values in cycle_values:
            if not values:
                raise InvalidSystemError('Cycles must contain at least one atom')
            first = len(perm)
            last = first + len(values) - 1
            perm.extend(atom + 1 if atom < last else first for atom in range(first, last + 1))
            f_values.extend(Fraction(v) for v in values)
        n = len(perm)
        return cls(tuple(perm), tuple(Fraction(1, n) for _ in range(n)), tuple(f_values))

    @classmethod
    def identity(cls, f_values: list[Number]) -> 'FiniteSystem':
        """Every atom fixed, uniform weights."""
        return cls.from_cycles([[value] for value in f_values])

    @classmethod
    def swap(cls, f_values: tuple[Number, Number] = (1, -1)) -> 'FiniteSystem':
        """The 2-cycle 0 <-> 1 with uniform weights."""
        return cls.from_cycles([list(f_values)])

    @classmethod
    def invariant_indicator(cls, cycle_lengths: list[int], chosen: set[int]) -> 'FiniteSystem':
        """Disjoint cycles with f = χ_A - μ(A), A the union of the chosen cycles.

        Args:
            cycle_lengths: Length of each cycle, in atom order
            chosen: Indices (into cycle_lengths) of the cycles forming A
        """
        n = sum(cycle_lengths)
        measure = Fraction(sum(cycle_lengths[index] for index in chosen), n)
        return cls.from_cycles([[(1 if index in chosen else 0) - measure] * length for index, length in enumerate(cycle_lengths)])

    @classmethod
    def random_system(
        cls,
        rng: np.random.Generator,
        n: int,
        f_min: int = -5,
        f_max: int = 5,
        nonzero: bool = False,
        single_cycle: bool = False,
    ) -> 'FiniteSystem':
        """Seeded random system: uniform weights, integer f in [f_min, f_max] with zero sum.

        f is drawn by rejection until it sums to zero (and, with ``nonzero``,
        is not identically zero). ``single_cycle`` draws a uniformly random
        n-cycle instead of a uniformly random permutation.

        Raises:
            InvalidSystemError: If the constraints cannot be met
        """
        if n < 1 or f_min > f_max:
            raise InvalidSystemError(f'Cannot draw a system with n={n}, f in [{f_min}, {f_max}]')
        if f_min > 0 or f_max < 0 or (nonzero and (n < 2 or not f_min < 0 < f_max)):
            raise InvalidSystemError(f'No zero-sum f in [{f_min}, {f_max}] on {n} atoms satisfies the request')

        if single_cycle:
            order = [int(atom) for atom in rng.permutation(n)]
            perm = [0] * n
            for position, atom in enumerate(order):
                perm[atom] = order[(position + 1) % n]
        else:
            perm = [int(atom) for atom in rng.permutation(n)]

        while True:
            values = rng.integers(f_min, f_max, size=n, endpoint=True)
            if values.sum() == 0 and not (nonzero and not values.any()):
                break

        return cls(tuple(perm), tuple(Fraction(1, n) for _ in range(n)), tuple(Fraction(int(v)) for v in values))

    def to_record(self) -> dict[str, Any]:
        """Plain-text record: n, perm, and weights / f-values as fraction strings."""
        return {
            'n': self.n,
            'perm': list(self.perm),
            'weights': [str(w) for w in self.weights],
            'f_values': [str(v) for v in self.f_values],
        }

    @classmethod
    def from_record(cls, record: dict[str, Any]) -> 'FiniteSystem':
        """Inverse of ``to_record``.

        Raises:
            SpecParseError: If keys are missing or values are malformed
        """
        try:
            perm = tuple(int(atom) for atom in record['perm'])
            weights = tuple(Fraction(w) for w in record['weights'])
            f_values = tuple(Fraction(v) for v in record['f_values'])
        except KeyError as e:
            raise SpecParseError(f'Finite system record is missing {e}') from e
        except (TypeError, ValueError, ZeroDivisionError) as e:
            raise SpecParseError(f'Malformed finite system record: {e}') from e
        if 'n' in record and record['n'] != len(perm):
            raise SpecParseError(f'Record says n={record["n"]} but perm has {len(perm)} entries')
        return cls(perm, weights, f_values)

    def dump(self, path: Path) -> None:
        """Write the record as TOML."""
        with path.open('wb') as f:
            tomli_w.dump(self.to_record(), f)

    @classmethod
    def load(cls, path: Path) -> 'FiniteSystem':
        """Read a TOML record written by ``dump``.

        Raises:
            SpecParseError: If the file cannot be read or parsed
        """
        try:
            with path.open('rb') as f:
                record = tomllib.load(f)
        except (tomllib.TOMLDecodeError, OSError) as e:
            raise SpecParseError(f'Cannot read finite system from {path}: {e}') from e
        return cls.from_record(record)
