"""Heaviness of the sequence x, 2x, 3x, ... (mod 1) for interval unions.

The sequence starts at 1*x, so it is the rotation-by-x orbit of the point x
and the deficit after n terms is #{1 <= i <= n : ix mod 1 in A} - n |A|.
For rational x = p/q the hits are q-periodic, which makes heaviness for all
N decidable from one period.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from heavysift.core.observables import IndicatorObservable
from heavysift.core.trace import DEFAULT_TOLERANCE
from heavysift.core.trace import DeficitTrace
from heavysift.core.trace import deficit_trace
from heavysift.core.trace import psi
from heavysift.errors import DomainMismatchError
from heavysift.errors import HorizonError
from heavysift.systems.circle import IntervalUnion
from heavysift.systems.circle import circle_point
from heavysift.systems.circle import rotation_system
from heavysift.utils.numbers import Number
from heavysift.utils.numbers import is_exact

logger = logging.getLogger(__name__)

INT64_SAFE = 2**62


@dataclass(frozen=True)
class MultiplesDecision:
    """Exact all-N verdict for a rational x.

    Deficits of the first period are kept scaled by ``scale`` (the denominator
    of |A|) as integers.
    """

    x: Fraction
    target: IntervalUnion
    heavy: bool
    first_failure: int | None
    scaled_deficits: tuple[int, ...]
    scale: int

    @property
    def period(self) -> int:
        return len(self.scaled_deficits)

    @property
    def period_deficits(self) -> tuple[Fraction, ...]:
        """d_1, ..., d_q."""
        return tuple(Fraction(value, self.scale) for value in self.scaled_deficits)

    @property
    def period_surplus(self) -> Fraction:
        """Δ = d_q: hits per period minus q |A|."""
        return Fraction(self.scaled_deficits[-1], self.scale)

    def deficit(self, n: int) -> Fraction:
        """d_n for any n >= 0 via d_{mq+r} = m Δ + d_r."""
        if n < 0:
            raise HorizonError(f'Deficit index must be nonnegative, got {n}')
        m, r = divmod(n, self.period)
        head = Fraction(self.scaled_deficits[r - 1], self.scale) if r else Fraction(0)
        return m * self.period_surplus + head


def multiples_deficits(x: Number, target: IntervalUnion, horizon: int, tolerance: float = DEFAULT_TOLERANCE) -> DeficitTrace:
    """Deficits d_0..d_N of the sequence x, 2x, ..., Nx against the indicator of ``target``.

    Exact when x and every endpoint are rational.
    """
    point = circle_point(x)
    return deficit_trace(rotation_system(point), point, IndicatorObservable(target), horizon, tolerance)


def _hit_thresholds(target: IntervalUnion, q: int) -> list[tuple[int, int]]:
    """Residue ranges [ceil(aq), ceil(bq)) equivalent to r/q in [a, b)."""
    return [(math.ceil(start * q), math.ceil(end * q)) for start, end in target.intervals]


def heavy_multiples_exact(x: Fraction | int, target: IntervalUnion) -> MultiplesDecision:
    """Decide heaviness of x, 2x, 3x, ... for ``target`` over all N.

    With x = p/q in lowest terms the residues ip mod q repeat with period q,
    so d_{mq+r} = m d_q + d_r. Heaviness for every N is therefore equivalent
    to d_1, ..., d_q >= 0, and any failure already happens in the first period.

    Raises:
        DomainMismatchError: If x is not an exact rational in [0, 1) or the target has irrational endpoints
    """
    if not is_exact(x) or not 0 <= x < 1:
        raise DomainMismatchError(f'Exact decisions need a rational x in [0, 1), got {x!r}; use multiples_deficits instead')
    if not target.exact:
        raise DomainMismatchError(f'Exact decisions need rational endpoints, got {target.describe()}')

    x = Fraction(x)
    p, q = x.numerator, x.denominator
    length = Fraction(target.total_length)
    scale, per_term = length.denominator, length.numerator

    # Python ints once the scaled values could leave int64.
    dtype: type | str = np.int64 if (scale + per_term) * q < INT64_SAFE else object
    residues = (np.arange(1, q + 1, dtype=np.int64) * p) % q
    hits = np.zeros(q, dtype=bool)
    for low, high in _hit_thresholds(target, q):
        hits |= (residues >= low) & (residues < high)

    scaled = scale * np.cumsum(hits.astype(dtype)) - per_term * np.arange(1, q + 1).astype(dtype)
    failing = np.flatnonzero(scaled < 0)
    first_failure = int(failing[0]) + 1 if failing.size else None

    return MultiplesDecision(
        x=x,
        target=target,
        heavy=first_failure is None,
        first_failure=first_failure,
        scaled_deficits=tuple(int(value) for value in scaled),
        scale=scale,
    )


@dataclass(frozen=True)
class MultiplesScan:
    """Grid points i/q whose multiples sequence is heavy."""

    resolution: int
    horizon: int | None
    survivors: tuple[Fraction, ...]
    numerical: bool

    @property
    def survivor_fraction(self) -> Fraction:
        return Fraction(len(self.survivors), self.resolution)


def heavy_multiples_scan(
    target: IntervalUnion,
    resolution: int,
    horizon: int | None = None,
    tolerance: float = DEFAULT_TOLERANCE,
) -> MultiplesScan:
    """Scan the grid 0, 1/q, ..., (q-1)/q.

    With ``horizon`` None the exact all-N decision is used (rational targets
    only); otherwise each point is checked through the finite horizon.

    Raises:
        HorizonError: If q < 1 or a given horizon is < 1
    """
    if resolution < 1:
        raise HorizonError(f'Grid resolution must be at least 1, got {resolution}')
    grid = [Fraction(index, resolution) for index in range(resolution)]

    if horizon is None:
        survivors = tuple(x for x in grid if heavy_multiples_exact(x, target).heavy)
        numerical = False
    else:
        if horizon < 1:
            raise HorizonError(f'Horizon must be at least 1, got {horizon}')
        reports = [(x, psi(multiples_deficits(x, target, horizon, tolerance))) for x in grid]
        survivors = tuple(x for x, report in reports if report.heavy)
        numerical = any(report.numerical for _, report in reports)

    logger.debug('%d of %d grid points survive for %s', len(survivors), resolution, target.describe())
    return MultiplesScan(resolution, horizon, survivors, numerical)
