"""Seeded sweeps over random finite systems.

Every sweep draws from ``numpy.random.default_rng(seed)`` so a given seed
always produces the same systems and the same summary.
"""

import logging
from dataclasses import dataclass
from dataclasses import field
from typing import Any

import numpy as np

from heavysift.errors import HorizonError
from heavysift.errors import InvalidSystemError
from heavysift.finite.heavy import psi_table
from heavysift.finite.heavy import window_set_exact
from heavysift.finite.system import FiniteSystem
from heavysift.finite.tower import certify_positive_measure

logger = logging.getLogger(__name__)


@dataclass
class SweepSummary:
    """Counts and failures of one sweep."""

    name: str
    systems: int = 0
    checks: int = 0
    failures: list[dict[str, Any]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict[str, Any]:
        return {
            'sweep': self.name,
            'systems': self.systems,
            'checks': self.checks,
            'failed': len(self.failures),
            'passed': self.passed,
            'failures': self.failures,
        }


def positive_measure_sweep(
    seed: int,
    atoms: int,
    count: int,
    horizon: int,
    f_min: int = -5,
    f_max: int = 5,
) -> SweepSummary:
    """Certify H(N) for N = 1..horizon on ``count`` random systems with 1..atoms atoms.

    Raises:
        HorizonError: If horizon < 1
        InvalidSystemError: If atoms < 1
    """
    if horizon < 1:
        raise HorizonError(f'Horizon must be at least 1, got {horizon}')
    if atoms < 1:
        raise InvalidSystemError(f'Systems need at least one atom, got {atoms}')

    rng = np.random.default_rng(seed)
    summary = SweepSummary('positive-measure')
    for index in range(count):
        n = int(rng.integers(1, atoms, endpoint=True))
        system = FiniteSystem.random_system(rng, n, f_min, f_max)
        table = psi_table(system, horizon)
        summary.systems += 1
        for n_horizon in range(1, horizon + 1):
            certificate = certify_positive_measure(system, n_horizon, table)
            summary.checks += 1
            if not certificate.holds:
                summary.failures.append(
                    {
                        'system_index': index,
                        'horizon': n_horizon,
                        'system': system.to_record(),
                        'reasons': certificate.failures(),
                    }
                )

    logger.info('Positive-measure sweep: %d systems, %d checks, %d failures', summary.systems, summary.checks, len(summary.failures))
    return summary


def ergodic_dichotomy_sweep(seed: int, max_atoms: int, choices: int, horizon: int) -> SweepSummary:
    """Both directions of the ergodicity dichotomy on small systems.

    Ergodic side: for ``choices`` random single cycles of 2..max_atoms atoms with
    a nonzero zero-sum f, H(-N, N) is nonempty for every N <= horizon.
    Non-ergodic side: for every split of up to max_atoms atoms into two
    cycles, f = χ_A - μ(A) with A the first cycle has H(-1, 1) empty.

    Raises:
        HorizonError: If horizon < 1
        InvalidSystemError: If max_atoms < 2
    """
    if horizon < 1:
        raise HorizonError(f'Horizon must be at least 1, got {horizon}')
    if max_atoms < 2:
        raise InvalidSystemError(f'The dichotomy needs at least two atoms, got {max_atoms}')

    rng = np.random.default_rng(seed)
    summary = SweepSummary('ergodic-dichotomy')

    for index in range(choices):
        n = int(rng.integers(2, max_atoms, endpoint=True))
        system = FiniteSystem.random_system(rng, n, nonzero=True, single_cycle=True)
        summary.systems += 1
        for n_horizon in range(1, horizon + 1):
            summary.checks += 1
            if not window_set_exact(system, -n_horizon, n_horizon):
                summary.failures.append(
                    {
                        'system_index': index,
                        'horizon': n_horizon,
                        'system': system.to_record(),
                        'reasons': [f'H(-{n_horizon}, {n_horizon}) is empty on a single cycle'],
                    }
                )

    for total in range(2, max_atoms + 1):
        for first in range(1, total):
            system = FiniteSystem.invariant_indicator([first, total - first], {0})
            summary.systems += 1
            summary.checks += 1
            window = window_set_exact(system, -1, 1)
            if window:
                summary.failures.append(
                    {
                        'system_index': None,
                        'horizon': 1,
                        'system': system.to_record(),
                        'reasons': [f'H(-1, 1) = {sorted(window)} is nonempty for an invariant indicator'],
                    }
                )

    logger.info('Ergodic dichotomy sweep: %d systems, %d checks, %d failures', summary.systems, summary.checks, len(summary.failures))
    return summary
