"""Finite-horizon searches for heavy points.

Candidates are scored by their lowest deficit min_{1<=n<=N} d_n; a candidate is
heavy through N exactly when that score is nonnegative. Float grids over
circle and torus systems are scored all at once with numpy.
"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Any

import numpy as np

from heavysift.core.observables import Observable
from heavysift.core.trace import DEFAULT_TOLERANCE
from heavysift.core.trace import HeavinessReport
from heavysift.core.trace import deficit_trace
from heavysift.core.trace import heavy_window
from heavysift.core.trace import psi
from heavysift.errors import EmptyCandidatesError
from heavysift.errors import HorizonError
from heavysift.systems.base import DynamicalSystem
from heavysift.utils.numbers import Number

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CandidateVerdict:
    """Score of one candidate point."""

    index: int
    point: Any
    min_deficit: Number
    psi: int | None
    numerical: bool

    @property
    def heavy(self) -> bool:
        return self.psi is None


@dataclass(frozen=True)
class CandidateResult:
    """Best candidate and its full report."""

    index: int
    point: Any
    report: HeavinessReport

    @property
    def heavy(self) -> bool:
        return self.report.heavy


@dataclass(frozen=True)
class TwoSidedSearchResult:
    """Outcome of the orbit walk behind the two-sided search.

    Attributes:
        point: T^k x0
        first_time: i, first orbit time heavy for the window (-N, 0)
        second_time: j > i, first later time heavy for the window (0, N)
        min_time: k in [i, j], first minimiser of d_k along the orbit of x0
        window: Largest N' <= N with the point in H(-N', N')
    """

    point: Any
    first_time: int
    second_time: int
    min_time: int
    window: int


def _supports_batch(system: DynamicalSystem, f: Observable, candidates: Any) -> bool:
    if not isinstance(candidates, np.ndarray) or not hasattr(system, 'step_batch'):
        return False
    try:
        f.evaluate_batch(np.zeros(1))
    except NotImplementedError:
        return False
    return True


def _batch_scores(
    system: DynamicalSystem,
    f: Observable,
    horizon: int,
    candidates: np.ndarray,
    tolerance: float,
) -> tuple[np.ndarray, np.ndarray]:
    """Lowest deficit and first failure time (0 for none) of every row of ``candidates``."""
    f.require_support(system)
    stepper = system.approximate()
    points = np.array(candidates, dtype=np.float64)
    mean = float(f.mean)

    running = np.zeros(len(points))
    lowest = np.full(len(points), np.inf)
    first_failure = np.zeros(len(points), dtype=np.int64)
    for n in range(1, horizon + 1):
        running += f.evaluate_batch(stepper.project_batch(points)) - mean
        np.minimum(lowest, running, out=lowest)
        newly_failed = (first_failure == 0) & (running < -tolerance)
        first_failure[newly_failed] = n
        points = stepper.step_batch(points)
    return lowest, first_failure


def _candidate_point(candidates: Any, index: int) -> Any:
    row = candidates[index]
    if isinstance(row, np.ndarray):
        return tuple(float(value) for value in row)
    if isinstance(row, np.floating):
        return float(row)
    return row


def scan_candidates(
    system: DynamicalSystem,
    f: Observable,
    horizon: int,
    candidates: Sequence[Any] | np.ndarray,
    tolerance: float = DEFAULT_TOLERANCE,
) -> list[CandidateVerdict]:
    """Score every candidate point.

    Raises:
        EmptyCandidatesError: If there are no candidates
        HorizonError: If N < 1
    """
    if len(candidates) == 0:
        raise EmptyCandidatesError('No candidate points to scan')
    if horizon < 1:
        raise HorizonError(f'Horizon must be at least 1, got {horizon}')

    if _supports_batch(system, f, candidates):
        lowest, first_failure = _batch_scores(system, f, horizon, candidates, tolerance)
        logger.debug('Scored %d candidates through %d in batch', len(lowest), horizon)
        return [
            CandidateVerdict(
                index=index,
                point=_candidate_point(candidates, index),
                min_deficit=float(lowest[index]),
                psi=int(first_failure[index]) or None,
                numerical=True,
            )
            for index in range(len(lowest))
        ]

    verdicts = []
    for index, point in enumerate(candidates):
        report = psi(deficit_trace(system, point, f, horizon, tolerance))
        verdicts.append(CandidateVerdict(index, point, report.min_deficit, report.psi, report.numerical))
    return verdicts


def find_heavy_candidate(
    system: DynamicalSystem,
    f: Observable,
    horizon: int,
    candidates: Sequence[Any] | np.ndarray,
    tolerance: float = DEFAULT_TOLERANCE,
) -> CandidateResult:
    """Candidate maximising min_{1<=n<=N} d_n, ties going to the lowest index.

    The caller decides what a nonnegative maximum means; ``result.heavy`` is
    the verdict for the chosen point, recomputed along its own orbit.

    Args:
        system: System to iterate
        f: Observable
        horizon: N >= 1
        candidates: Sequence of points, or a float array of shape (M,) / (M, k)
        tolerance: Approximate-mode slack

    Returns:
        The winning candidate with its HeavinessReport

    Raises:
        EmptyCandidatesError: If there are no candidates
    """
    if _supports_batch(system, f, candidates) and len(candidates) > 0 and horizon >= 1:
        lowest, _ = _batch_scores(system, f, horizon, candidates, tolerance)
        # argmax returns the first maximiser
        best = int(np.argmax(lowest))
    else:
        verdicts = scan_candidates(system, f, horizon, candidates, tolerance)
        best = max(verdicts, key=lambda verdict: (verdict.min_deficit, -verdict.index)).index

    point = _candidate_point(candidates, best)
    report = psi(deficit_trace(system, point, f, horizon, tolerance))
    logger.info('Best of %d candidates is #%d with min deficit %s', len(candidates), best, report.min_deficit)
    return CandidateResult(best, point, report)


def two_sided_search(
    system: DynamicalSystem,
    f: Observable,
    horizon: int,
    x0: Any,
    max_steps: int,
    tolerance: float = DEFAULT_TOLERANCE,
) -> TwoSidedSearchResult | None:
    """Walk the orbit of x0 looking for a point heavy in both time directions.

    Finds the first i in [0, M] with T^i x0 in H(-N, 0), then the first j in
    (i, M] with T^j x0 in H(0, N). The point T^k x0, where k is the first
    minimiser of d_k(x0) over [i, j], is then heavy on both sides; the largest
    symmetric window N' <= N it verifiably satisfies is reported.

    Returns:
        The search result, or None when no such pair (i, j) occurs within M steps

    Raises:
        NonInvertibleSystemError: If the system has no inverse
        HorizonError: If M < 1 or N < 0
    """
    system.require_invertible()
    if max_steps < 1:
        raise HorizonError(f'max_steps must be at least 1, got {max_steps}')
    if horizon < 0:
        raise HorizonError(f'Horizon must be nonnegative, got {horizon}')

    orbit = system.orbit(x0, max_steps + 1)

    first_time = next((t for t, point in enumerate(orbit) if heavy_window(system, point, f, -horizon, 0, tolerance)), None)
    if first_time is None:
        logger.debug('No backward-heavy point within %d steps', max_steps)
        return None

    second_time = next(
        (t for t in range(first_time + 1, max_steps + 1) if heavy_window(system, orbit[t], f, 0, horizon, tolerance)),
        None,
    )
    if second_time is None:
        logger.debug('No forward-heavy point after time %d within %d steps', first_time, max_steps)
        return None

    trace = deficit_trace(system, x0, f, second_time, tolerance)
    min_time = min(range(first_time, second_time + 1), key=trace.at)
    point = orbit[min_time]

    window = next(n for n in range(horizon, -1, -1) if heavy_window(system, point, f, -n, n, tolerance))
    logger.info('Two-sided search: i=%d j=%d k=%d verified window %d', first_time, second_time, min_time, window)
    return TwoSidedSearchResult(point, first_time, second_time, min_time, window)
