"""Cross-check of the multiples decision against the continued-fraction criterion."""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from heavysift.errors import DomainMismatchError
from heavysift.multiples.continued_fraction import cf_expand_normalized
from heavysift.multiples.continued_fraction import odd_index_divisible
from heavysift.multiples.sequence import heavy_multiples_exact
from heavysift.systems.circle import IntervalUnion

logger = logging.getLogger(__name__)

SWEEP_COLUMNS = ('p', 'q', 'heavy', 'divisible', 'agree', 'delta', 'first_failure')


@dataclass(frozen=True)
class CharacterizationRow:
    """Both verdicts for one reduced fraction p/q."""

    p: int
    q: int
    heavy: bool
    divisible: bool
    delta: Fraction
    first_failure: int | None
    quotients: tuple[int, ...]

    @property
    def agree(self) -> bool:
        return self.heavy == self.divisible

    def to_dict(self) -> dict[str, Any]:
        return {
            'p': self.p,
            'q': self.q,
            'heavy': self.heavy,
            'divisible': self.divisible,
            'agree': self.agree,
            'delta': self.delta,
            'first_failure': self.first_failure,
        }


@dataclass(frozen=True)
class CharacterizationReport:
    """All rows of a sweep plus the agreement tally."""

    k: int
    q_max: int
    rows: tuple[CharacterizationRow, ...]

    @property
    def total(self) -> int:
        return len(self.rows)

    @property
    def agreements(self) -> int:
        return sum(1 for row in self.rows if row.agree)

    @property
    def mismatches(self) -> list[CharacterizationRow]:
        return [row for row in self.rows if not row.agree]

    @property
    def passed(self) -> bool:
        return self.agreements == self.total


def characterization_row(p: int, q: int, k: int) -> CharacterizationRow:
    """Compare heaviness on [0, 1/k) with odd-index divisibility for p/q."""
    x = Fraction(p, q)
    decision = heavy_multiples_exact(x, IntervalUnion(((Fraction(0), Fraction(1, k)),)))
    cf = cf_expand_normalized(x)
    return CharacterizationRow(
        p=x.numerator,
        q=x.denominator,
        heavy=decision.heavy,
        divisible=odd_index_divisible(cf, k),
        delta=decision.period_surplus,
        first_failure=decision.first_failure,
        quotients=cf.quotients,
    )


def characterization_sweep(k: int, q_max: int) -> CharacterizationReport:
    """Run ``characterization_row`` for every reduced p/q with 1 <= p < q <= q_max.

    Rows are ordered by q, then p.

    Raises:
        DomainMismatchError: If k < 2 or q_max < 2
    """
    if k < 2 or q_max < 2:
        raise DomainMismatchError(f'Sweeps need k >= 2 and q_max >= 2, got k={k}, q_max={q_max}')

    rows = tuple(characterization_row(p, q, k) for q in range(2, q_max + 1) for p in range(1, q) if math.gcd(p, q) == 1)
    report = CharacterizationReport(k, q_max, rows)
    if report.mismatches:
        logger.warning('Characterization sweep k=%d: %d mismatches', k, len(report.mismatches))
    logger.info('Characterization sweep k=%d q<=%d: %d/%d agree', k, q_max, report.agreements, report.total)
    return report
