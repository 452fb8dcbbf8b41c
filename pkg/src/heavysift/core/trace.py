"""Deficit traces and heaviness predicates.

The central object is the deficit d_n = S_n(x) - n ∫ f dμ, where
S_n(x) = f(x) + f(Tx) + ... + f(T^{n-1}x) for n >= 0 and, for invertible T,
S_n(x) = -[f(T^{-1}x) + ... + f(T^{n}x)] for n < 0. A point is heavy through
time N when d_1, ..., d_N are all nonnegative.

Exact mode (Fractions) is used whenever the system, the point and the
observable are all rational; otherwise deficits are floats and a deficit
counts as negative only below -tolerance.
"""

import itertools
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from heavysift.core.observables import Observable
from heavysift.errors import DomainMismatchError
from heavysift.errors import HorizonError
from heavysift.systems.base import DynamicalSystem
from heavysift.utils.numbers import Number
from heavysift.utils.numbers import is_exact

DEFAULT_TOLERANCE = 1e-9

EXACT = 'exact'
APPROXIMATE = 'approximate'


@dataclass(frozen=True)
class DeficitTrace:
    """Deficits d_start, ..., d_horizon of one orbit.

    Attributes:
        start: First index (0 for one-sided traces, n1 <= 0 for two-sided ones)
        deficits: d_start .. d_horizon in index order
        numeric_mode: 'exact' or 'approximate'
        tolerance: Slack for approximate comparisons (0 in exact mode)
    """

    start: int
    deficits: tuple[Number, ...]
    numeric_mode: str
    tolerance: float = 0.0

    @property
    def horizon(self) -> int:
        """Last index covered by the trace."""
        return self.start + len(self.deficits) - 1

    @property
    def exact(self) -> bool:
        return self.numeric_mode == EXACT

    def indices(self) -> range:
        """All indices covered, in order."""
        return range(self.start, self.horizon + 1)

    def at(self, index: int) -> Number:
        """d_index.

        Raises:
            HorizonError: If the index lies outside the trace
        """
        if not self.start <= index <= self.horizon:
            raise HorizonError(f'Index {index} outside the trace window [{self.start}, {self.horizon}]')
        return self.deficits[index - self.start]

    def is_negative(self, value: Number) -> bool:
        """Strict failure test: d < 0 exactly, or d < -tolerance approximately."""
        return value < 0 if self.exact else value < -self.tolerance

    def is_zero(self, value: Number) -> bool:
        """Zero test: d == 0 exactly, or |d| <= tolerance approximately."""
        return value == 0 if self.exact else abs(value) <= self.tolerance


@dataclass(frozen=True)
class HeavinessReport:
    """Summary of the positive-time part of a trace.

    ``psi`` is None when no failure occurs within the horizon ("beyond-horizon").
    """

    horizon: int
    psi: int | None
    min_deficit: Number
    argmin_time: int
    zero_times: tuple[int, ...]
    sign_changes: int
    numerical: bool

    @property
    def heavy(self) -> bool:
        return self.psi is None


@dataclass(frozen=True)
class ResolvedRun:
    """System, point and mean converted to the numeric mode a computation runs in."""

    exact: bool
    system: DynamicalSystem
    point: Any
    mean: Number
    tolerance: float

    @property
    def zero(self) -> Number:
        return Fraction(0) if self.exact else 0.0

    def value(self, observable: Observable, point: Any) -> Number:
        """f at ``point`` in the run's numeric mode."""
        raw = observable(self.system.project(point))
        return raw if self.exact else float(raw)


def _point_is_exact(point: Any) -> bool:
    if isinstance(point, tuple):
        return all(is_exact(value) for value in point)
    return is_exact(point)


def resolve_run(system: DynamicalSystem, point: Any, observable: Observable, tolerance: float = DEFAULT_TOLERANCE) -> ResolvedRun:
    """Validate inputs and pick exact or approximate mode.

    Raises:
        DomainMismatchError: If the observable cannot be evaluated on the system or
            the point lies outside the system's domain
    """
    observable.require_support(system)
    if not system.contains(point):
        raise DomainMismatchError(f'Point {point!r} is not in the domain of {system.describe()}')

    exact = system.exact and observable.exact and _point_is_exact(point)
    if exact:
        return ResolvedRun(True, system, system.coerce_point(point, True), Fraction(observable.mean), 0.0)

    approximate_system = system.approximate()
    return ResolvedRun(
        False,
        approximate_system,
        approximate_system.coerce_point(point, False),
        float(observable.mean),
        tolerance,
    )


def _forward_deficits(run: ResolvedRun, observable: Observable, horizon: int) -> list[Number]:
    deficits = [run.zero]
    running = run.zero
    current = run.point
    for _ in range(horizon):
        running += run.value(observable, current) - run.mean
        deficits.append(running)
        current = run.system.step(current)
    return deficits


def _backward_deficits(run: ResolvedRun, observable: Observable, depth: int) -> list[Number]:
    """d_{-1}, ..., d_{-depth}."""
    deficits = []
    running = run.zero
    current = run.point
    for _ in range(depth):
        current = run.system.inverse_step(current)
        running -= run.value(observable, current) - run.mean
        deficits.append(running)
    return deficits


def deficit_trace(
    system: DynamicalSystem,
    x: Any,
    f: Observable,
    horizon: int,
    tolerance: float = DEFAULT_TOLERANCE,
) -> DeficitTrace:
    """One-sided deficits d_0, ..., d_N of the orbit of x.

    Raises:
        HorizonError: If N < 1
        DomainMismatchError: If f or x do not fit the system
    """
    if horizon < 1:
        raise HorizonError(f'Horizon must be at least 1, got {horizon}')
    run = resolve_run(system, x, f, tolerance)
    return DeficitTrace(
        start=0,
        deficits=tuple(_forward_deficits(run, f, horizon)),
        numeric_mode=EXACT if run.exact else APPROXIMATE,
        tolerance=run.tolerance,
    )


def two_sided_trace(
    system: DynamicalSystem,
    x: Any,
    f: Observable,
    n1: int,
    n2: int,
    tolerance: float = DEFAULT_TOLERANCE,
) -> DeficitTrace:
    """Deficits d_{n1}, ..., d_{n2} with the negative-time convention.

    Raises:
        NonInvertibleSystemError: If the system has no inverse
        HorizonError: Unless n1 <= 0 <= n2
    """
    system.require_invertible()
    if n1 > 0 or n2 < 0:
        raise HorizonError(f'Two-sided windows need n1 <= 0 <= n2, got ({n1}, {n2})')
    run = resolve_run(system, x, f, tolerance)
    backward = _backward_deficits(run, f, -n1)
    forward = _forward_deficits(run, f, n2)
    return DeficitTrace(
        start=n1,
        deficits=(*reversed(backward), *forward),
        numeric_mode=EXACT if run.exact else APPROXIMATE,
        tolerance=run.tolerance,
    )


def psi(trace: DeficitTrace) -> HeavinessReport:
    """First failure time ψ and diagnostics over the positive indices of a trace."""
    positive = [n for n in trace.indices() if n >= 1]

    first_failure = next((n for n in positive if trace.is_negative(trace.at(n))), None)

    if positive:
        argmin_time = min(positive, key=trace.at)
        min_deficit = trace.at(argmin_time)
    else:
        argmin_time = 0
        min_deficit = trace.at(0)

    zero_times = tuple(n for n in positive if trace.is_zero(trace.at(n)))

    signs = [1 if trace.at(n) > 0 else -1 for n in positive if not trace.is_zero(trace.at(n))]
    sign_changes = sum(1 for before, after in itertools.pairwise(signs) if before != after)

    return HeavinessReport(
        horizon=trace.horizon,
        psi=first_failure,
        min_deficit=min_deficit,
        argmin_time=argmin_time,
        zero_times=zero_times,
        sign_changes=sign_changes,
        numerical=not trace.exact,
    )


def heavy_through(
    system: DynamicalSystem,
    x: Any,
    f: Observable,
    horizon: int,
    tolerance: float = DEFAULT_TOLERANCE,
) -> bool:
    """Membership of x in H(N); H(0) is the whole space."""
    if horizon < 0:
        raise HorizonError(f'Horizon must be nonnegative, got {horizon}')
    if horizon == 0:
        resolve_run(system, x, f, tolerance)
        return True
    return psi(deficit_trace(system, x, f, horizon, tolerance)).heavy


def window_trace(
    system: DynamicalSystem,
    x: Any,
    f: Observable,
    n1: int,
    n2: int,
    tolerance: float = DEFAULT_TOLERANCE,
) -> DeficitTrace:
    """Smallest trace covering [min(n1, 0), max(n2, 0)]."""
    if n1 > n2:
        raise HorizonError(f'Empty window ({n1}, {n2})')
    low, high = min(n1, 0), max(n2, 0)
    if low < 0:
        return two_sided_trace(system, x, f, low, high, tolerance)
    if high == 0:
        run = resolve_run(system, x, f, tolerance)
        return DeficitTrace(0, (run.zero,), EXACT if run.exact else APPROXIMATE, run.tolerance)
    return deficit_trace(system, x, f, high, tolerance)


def heavy_window(
    system: DynamicalSystem,
    x: Any,
    f: Observable,
    n1: int,
    n2: int,
    tolerance: float = DEFAULT_TOLERANCE,
) -> bool:
    """Membership of x in H(n1, n2): d_i >= 0 for every i in [n1, n2].

    Invertibility is only required when the window reaches negative times.
    """
    trace = window_trace(system, x, f, n1, n2, tolerance)
    return not any(trace.is_negative(trace.at(index)) for index in range(n1, n2 + 1))


def shifted_window_heavy(trace: DeficitTrace, m: int, n1: int, n2: int) -> bool:
    """Whether T^m x lies in H(n1, n2), read off a single trace of x.

    Uses S_n(T^m x) = S_{n+m}(x) - S_m(x): the condition becomes
    d_m <= d_{m+i} for every i in [n1, n2].
    """
    base = trace.at(m)
    return not any(trace.is_negative(trace.at(m + offset) - base) for offset in range(n1, n2 + 1))


def shifted_heavy_forward(trace: DeficitTrace, m: int, horizon: int) -> bool:
    """Whether T^m x is heavy through ``horizon``: S_m(x) <= S_{m+i}(x) for i = 0..horizon."""
    return shifted_window_heavy(trace, m, 0, horizon)


def check_telescoping(trace: DeficitTrace, system: DynamicalSystem, x: Any, f: Observable) -> bool:
    """Recompute every increment d_n - d_{n-1} = f(T^{n-1}x) - mean from the orbit.

    Exact traces must match exactly; approximate ones within a few ulps of the
    running sums involved.
    """
    run = resolve_run(system, x, f, trace.tolerance or DEFAULT_TOLERANCE)
    epsilon = sys.float_info.epsilon
    forward = run.system.orbit(run.point, max(trace.horizon, 0))
    for n in range(1, trace.horizon + 1):
        expected = run.value(f, forward[n - 1]) - run.mean
        increment = trace.at(n) - trace.at(n - 1)
        if trace.exact and increment != expected:
            return False
        if not trace.exact and abs(increment - expected) > 4 * epsilon * (abs(trace.at(n)) + abs(trace.at(n - 1)) + 1):
            return False
    if trace.start < 0:
        backward = run.system.backward_orbit(run.point, -trace.start)
        for n in range(trace.start + 1, 1):
            # d_n - d_{n-1} = f(T^{n-1}x) - mean, with T^{n-1}x = backward[-n]
            expected = run.value(f, backward[-n]) - run.mean
            increment = trace.at(n) - trace.at(n - 1)
            if trace.exact and increment != expected:
                return False
            if not trace.exact and abs(increment - expected) > 4 * epsilon * (abs(trace.at(n)) + abs(trace.at(n - 1)) + 1):
                return False
    return True
