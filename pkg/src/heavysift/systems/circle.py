"""Circle maps and interval unions on S^1 = [0, 1).

Points are Fractions in exact mode and floats in approximate mode; every
arithmetic result is reduced mod 1 back into [0, 1).
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any
from typing import ClassVar

import numpy as np

from heavysift.errors import DomainMismatchError
from heavysift.errors import InvalidSystemError
from heavysift.systems.base import DynamicalSystem
from heavysift.utils.numbers import Number
from heavysift.utils.numbers import is_exact
from heavysift.utils.numbers import reduce_mod1


def is_circle_point(value: object) -> bool:
    """Check that a value is a number in [0, 1)."""
    if isinstance(value, bool) or not isinstance(value, int | Fraction | float):
        return False
    return 0 <= value < 1


def circle_point(value: Number) -> Fraction | float:
    """Validate and normalise a circle point.

    Raises:
        DomainMismatchError: If the value is not in [0, 1)
    """
    if not is_circle_point(value):
        raise DomainMismatchError(f'Circle points must lie in [0, 1), got {value!r}')
    return value if isinstance(value, float) else Fraction(value)


def mod1_batch(values: np.ndarray) -> np.ndarray:
    """Vectorised reduction into [0, 1)."""
    reduced = np.mod(values, 1.0)
    reduced[reduced >= 1.0] = 0.0
    return reduced


@dataclass(frozen=True)
class IntervalUnion:
    """Finite union of half-open intervals [a, b) inside [0, 1).

    Intervals are sorted and pairwise disjoint; touching endpoints are allowed.
    """

    intervals: tuple[tuple[Number, Number], ...]

    def __post_init__(self) -> None:
        previous_end: Number | None = None
        for start, end in self.intervals:
            if not (0 <= start < end <= 1):
                raise DomainMismatchError(f'Interval [{start}, {end}) is not a nonempty subinterval of [0, 1]')
            if previous_end is not None and start < previous_end:
                raise DomainMismatchError(f'Intervals overlap or are unsorted at [{start}, {end})')
            previous_end = end

    @classmethod
    def from_pairs(cls, pairs: list[tuple[Number, Number]]) -> 'IntervalUnion':
        """Build a union from (a, b) pairs in any order."""
        return cls(tuple(sorted((start, end) for start, end in pairs)))

    @classmethod
    def full(cls) -> 'IntervalUnion':
        """The whole circle [0, 1)."""
        return cls(((Fraction(0), Fraction(1)),))

    @classmethod
    def empty(cls) -> 'IntervalUnion':
        """The empty union."""
        return cls(())

    @property
    def total_length(self) -> Number:
        """Lebesgue measure of the union."""
        return sum((end - start for start, end in self.intervals), Fraction(0))

    @property
    def exact(self) -> bool:
        """True when every endpoint is rational."""
        return all(is_exact(start) and is_exact(end) for start, end in self.intervals)

    def contains(self, x: Number) -> bool:
        """Half-open membership test."""
        return any(start <= x < end for start, end in self.intervals)

    def contains_batch(self, values: np.ndarray) -> np.ndarray:
        """Vectorised membership test over a float array."""
        inside = np.zeros(values.shape, dtype=bool)
        for start, end in self.intervals:
            inside |= (values >= float(start)) & (values < float(end))
        return inside

    def complement(self) -> 'IntervalUnion':
        """The union of the gaps, again as half-open intervals."""
        gaps = []
        cursor: Number = Fraction(0)
        for start, end in self.intervals:
            if cursor < start:
                gaps.append((cursor, start))
            cursor = end
        if cursor < 1:
            gaps.append((cursor, Fraction(1)))
        return IntervalUnion(tuple(gaps))

    def describe(self) -> str:
        """Render as [a,b) ∪ [c,d)."""
        if not self.intervals:
            return '∅'
        return ' ∪ '.join(f'[{start},{end})' for start, end in self.intervals)


@dataclass(frozen=True)
class RotationSystem(DynamicalSystem):
    """R_alpha(x) = x + alpha mod 1."""

    alpha: Fraction | float

    domain: ClassVar[str] = 'circle'
    invertible: ClassVar[bool] = True

    def __post_init__(self) -> None:
        object.__setattr__(self, 'alpha', reduce_mod1(self.alpha))

    @property
    def exact(self) -> bool:
        return is_exact(self.alpha)

    def step(self, point: Any) -> Any:
        return reduce_mod1(point + self.alpha)

    def inverse_step(self, point: Any) -> Any:
        return reduce_mod1(point - self.alpha)

    def step_batch(self, points: np.ndarray) -> np.ndarray:
        """Advance a float array of circle points by one step."""
        return mod1_batch(points + float(self.alpha))

    def contains(self, point: Any) -> bool:
        return is_circle_point(point)

    def approximate(self) -> 'RotationSystem':
        return RotationSystem(float(self.alpha))

    def coerce_point(self, point: Any, exact: bool) -> Any:
        return Fraction(point) if exact else float(point)

    def describe(self) -> str:
        return f'rotation by {self.alpha}'


@dataclass(frozen=True)
class TimesMSystem(DynamicalSystem):
    """x -> m x mod 1, an m-to-one map preserving Lebesgue measure."""

    m: int

    domain: ClassVar[str] = 'circle'
    invertible: ClassVar[bool] = False

    def __post_init__(self) -> None:
        if isinstance(self.m, bool) or not isinstance(self.m, int) or self.m < 2:
            raise InvalidSystemError(f'times-m map needs an integer m >= 2, got {self.m!r}')

    @property
    def exact(self) -> bool:
        return True

    def step(self, point: Any) -> Any:
        return reduce_mod1(self.m * point)

    def step_batch(self, points: np.ndarray) -> np.ndarray:
        """Advance a float array of circle points by one step."""
        return mod1_batch(points * self.m)

    def preimages(self, point: Any) -> list[Any]:
        """The m points mapped onto ``point``, in increasing order."""
        return [(point + shift) / self.m for shift in range(self.m)]

    def contains(self, point: Any) -> bool:
        return is_circle_point(point)

    def coerce_point(self, point: Any, exact: bool) -> Any:
        return Fraction(point) if exact else float(point)

    def describe(self) -> str:
        return f'times-{self.m} map'


def rotation_system(alpha: Number) -> RotationSystem:
    """Rotation of the circle by alpha (exact when alpha is rational)."""
    return RotationSystem(alpha if isinstance(alpha, float) else Fraction(alpha))


def times_m_system(m: int) -> TimesMSystem:
    """The map x -> m x mod 1; not invertible."""
    return TimesMSystem(m)


def circle_grid(resolution: int) -> list[Fraction]:
    """The rational grid 0, 1/q, ..., (q-1)/q."""
    if resolution < 1:
        raise DomainMismatchError(f'Grid resolution must be positive, got {resolution}')
    return [Fraction(index, resolution) for index in range(resolution)]
