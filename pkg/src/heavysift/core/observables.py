"""Observables f and their space averages ∫ f dμ.

Observables only need to be evaluable pointwise. Each kind declares which
system domains it can be evaluated on; torus systems expose their last
coordinate, so circle observables work there too.
"""

import bisect
import itertools
from abc import ABC
from abc import abstractmethod
from dataclasses import dataclass
from dataclasses import field
from fractions import Fraction
from typing import Any
from typing import ClassVar

import numpy as np

from heavysift.errors import DomainMismatchError
from heavysift.systems.base import DynamicalSystem
from heavysift.systems.circle import IntervalUnion
from heavysift.systems.morse import MORSE_STREAM
from heavysift.systems.morse import SymbolicStream
from heavysift.utils.numbers import Number
from heavysift.utils.numbers import is_exact

CIRCLE_DOMAINS = frozenset({'circle', 'torus'})


class Observable(ABC):
    """A function on the state space with a known mean."""

    kind: ClassVar[str]
    domains: ClassVar[frozenset[str]]

    @property
    @abstractmethod
    def mean(self) -> Number:
        """The space average ∫ f dμ."""

    @property
    @abstractmethod
    def exact(self) -> bool:
        """True when values and mean are rational."""

    @abstractmethod
    def __call__(self, value: Any) -> Number:
        """Evaluate f on a projected point."""

    def evaluate_batch(self, values: np.ndarray) -> np.ndarray:
        """Vectorised evaluation over a float array (circle observables only)."""
        raise NotImplementedError(f'{self.kind} observables have no vectorised form')

    def supports(self, system: DynamicalSystem) -> bool:
        """Whether f can be evaluated on points of ``system``."""
        return system.domain in self.domains

    def require_support(self, system: DynamicalSystem) -> None:
        """Raise DomainMismatchError unless ``supports(system)``."""
        if not self.supports(system):
            raise DomainMismatchError(f'A {self.kind} observable cannot be evaluated on {system.describe()}')

    def negated(self) -> 'Observable':
        """The observable -f."""
        return NegatedObservable(self)

    @abstractmethod
    def describe(self) -> str:
        """Short text form for reports."""


@dataclass(frozen=True)
class IndicatorObservable(Observable):
    """χ_A for a finite union of half-open intervals A."""

    target: IntervalUnion

    kind: ClassVar[str] = 'indicator'
    domains: ClassVar[frozenset[str]] = CIRCLE_DOMAINS

    @property
    def mean(self) -> Number:
        return self.target.total_length

    @property
    def exact(self) -> bool:
        return self.target.exact

    def __call__(self, value: Any) -> int:
        return 1 if self.target.contains(value) else 0

    def evaluate_batch(self, values: np.ndarray) -> np.ndarray:
        return self.target.contains_batch(values).astype(np.float64)

    def describe(self) -> str:
        return f'indicator of {self.target.describe()}'


@dataclass(frozen=True)
class StepObservable(Observable):
    """Piecewise-constant circle function.

    ``values[i]`` holds on [c_i, c_{i+1}) where c_0 = 0, c_1..c_m are the
    breakpoints and c_{m+1} = 1. No breakpoints gives a constant.
    """

    breakpoints: tuple[Number, ...]
    values: tuple[Number, ...]

    kind: ClassVar[str] = 'step-function'
    domains: ClassVar[frozenset[str]] = CIRCLE_DOMAINS

    def __post_init__(self) -> None:
        if len(self.values) != len(self.breakpoints) + 1:
            raise DomainMismatchError(
                f'A step function with {len(self.breakpoints)} breakpoints needs {len(self.breakpoints) + 1} values, got {len(self.values)}'
            )
        cuts = (0, *self.breakpoints, 1)
        if any(not (left < right) for left, right in itertools.pairwise(cuts)):
            raise DomainMismatchError('Breakpoints must be strictly increasing inside (0, 1)')

    @property
    def mean(self) -> Number:
        cuts = (Fraction(0), *self.breakpoints, Fraction(1))
        return sum((value * (cuts[i + 1] - cuts[i]) for i, value in enumerate(self.values)), Fraction(0))

    @property
    def exact(self) -> bool:
        return all(is_exact(v) for v in (*self.breakpoints, *self.values))

    def __call__(self, value: Any) -> Number:
        return self.values[bisect.bisect_right(self.breakpoints, value)]

    def evaluate_batch(self, values: np.ndarray) -> np.ndarray:
        table = np.array([float(v) for v in self.values])
        cuts = np.array([float(b) for b in self.breakpoints])
        return table[np.searchsorted(cuts, values, side='right')]

    def describe(self) -> str:
        if not self.breakpoints:
            return f'constant {self.values[0]}'
        return f'step function with breakpoints {", ".join(map(str, self.breakpoints))}'


def constant_observable(value: Number) -> StepObservable:
    """The constant function ``value`` on the circle (and torus)."""
    return StepObservable((), (value,))


@dataclass(frozen=True)
class TableObservable(Observable):
    """Values on the atoms of a finite system; the mean is weight-weighted."""

    values: tuple[Number, ...]
    weights: tuple[Number, ...]

    kind: ClassVar[str] = 'table'
    domains: ClassVar[frozenset[str]] = frozenset({'finite'})

    def __post_init__(self) -> None:
        if len(self.values) != len(self.weights):
            raise DomainMismatchError(f'{len(self.values)} values given for {len(self.weights)} atoms')

    @property
    def mean(self) -> Number:
        return sum((w * v for w, v in zip(self.weights, self.values, strict=True)), Fraction(0))

    @property
    def exact(self) -> bool:
        return all(is_exact(v) for v in (*self.values, *self.weights))

    def supports(self, system: DynamicalSystem) -> bool:
        return super().supports(system) and getattr(system, 'n', None) == len(self.values)

    def __call__(self, value: Any) -> Number:
        return self.values[value]

    def describe(self) -> str:
        return f'table ({", ".join(map(str, self.values))})'


@dataclass(frozen=True)
class CylinderObservable(Observable):
    """Indicator of the cylinder set {y : y starts with ``word``} in the Morse shift."""

    word: str
    frequency: Fraction
    stream: SymbolicStream = field(default=MORSE_STREAM, compare=False, repr=False)

    kind: ClassVar[str] = 'cylinder'
    domains: ClassVar[frozenset[str]] = frozenset({'symbolic'})

    def __post_init__(self) -> None:
        if not self.word or set(self.word) - {'0', '1'}:
            raise DomainMismatchError(f'Cylinder words are nonempty bit strings, got {self.word!r}')

    @property
    def mean(self) -> Number:
        return self.frequency

    @property
    def exact(self) -> bool:
        return is_exact(self.frequency)

    def __call__(self, value: Any) -> int:
        if len(self.word) == 1:
            return 1 if self.stream.bit(value) == int(self.word) else 0
        return 1 if self.stream.word_at(value, len(self.word)) == self.word else 0

    def describe(self) -> str:
        return f'cylinder [{self.word}]'


@dataclass(frozen=True)
class NegatedObservable(Observable):
    """-f for any observable f."""

    inner: Observable

    kind: ClassVar[str] = 'negated'
    domains: ClassVar[frozenset[str]] = frozenset()

    @property
    def mean(self) -> Number:
        return -self.inner.mean

    @property
    def exact(self) -> bool:
        return self.inner.exact

    def supports(self, system: DynamicalSystem) -> bool:
        return self.inner.supports(system)

    def __call__(self, value: Any) -> Number:
        return -self.inner(value)

    def evaluate_batch(self, values: np.ndarray) -> np.ndarray:
        return -self.inner.evaluate_batch(values)

    def negated(self) -> Observable:
        return self.inner

    def describe(self) -> str:
        return f'-({self.inner.describe()})'
