"""Continued fractions of rationals with an even number of partial quotients.

Every rational has two expansions, [a0; a1, ..., am] with am >= 2 and
[a0; a1, ..., am - 1, 1]; exactly one of them has even m. Indexing starts at
a1, so a0 never counts towards the parity.
"""

from dataclasses import dataclass
from fractions import Fraction

from heavysift.errors import DomainMismatchError
from heavysift.errors import NotNormalizedError
from heavysift.utils.numbers import is_exact


@dataclass(frozen=True)
class ContinuedFraction:
    """[a0; a1, ..., am] with positive partial quotients a1..am."""

    a0: int
    quotients: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(a < 1 for a in self.quotients):
            raise DomainMismatchError(f'Partial quotients must be positive, got {list(self.quotients)}')

    @classmethod
    def from_quotients(cls, a0: int, quotients: list[int]) -> 'ContinuedFraction':
        return cls(a0, tuple(quotients))

    @property
    def is_normalized(self) -> bool:
        """True when the number of partial quotients is even."""
        return len(self.quotients) % 2 == 0

    def value(self) -> Fraction:
        """Exact value, folded from the last quotient up."""
        result = Fraction(0)
        for index, a in enumerate(reversed(self.quotients)):
            result = Fraction(1) / (a + result) if index else Fraction(1, a)
        return self.a0 + result

    def normalized(self) -> 'ContinuedFraction':
        """The value-preserving even-length form.

        An odd expansion ending in a_m >= 2 becomes [..., a_m - 1, 1]; one ending
        in a_m = 1 merges it into the previous quotient.
        """
        if self.is_normalized:
            return self
        *head, last = self.quotients
        if last >= 2:
            return ContinuedFraction(self.a0, (*head, last - 1, 1))
        if not head:
            return ContinuedFraction(self.a0 + 1, ())
        *rest, previous = head
        return ContinuedFraction(self.a0, (*rest, previous + 1))

    def convergents(self) -> list[Fraction]:
        """h_j / k_j for j = 0..m."""
        h_prev, h = 1, self.a0
        k_prev, k = 0, 1
        found = [Fraction(h, k)]
        for a in self.quotients:
            h_prev, h = h, a * h + h_prev
            k_prev, k = k, a * k + k_prev
            found.append(Fraction(h, k))
        return found

    def __str__(self) -> str:
        return f'[{self.a0}; {", ".join(map(str, self.quotients))}]'


def cf_expand(x: Fraction) -> ContinuedFraction:
    """Plain Euclidean expansion; the last quotient is >= 2 unless the expansion is empty."""
    numerator, denominator = x.numerator, x.denominator
    a0, numerator = divmod(numerator, denominator)
    quotients = []
    while numerator:
        denominator, (a, numerator) = numerator, divmod(denominator, numerator)
        quotients.append(a)
    return ContinuedFraction(a0, tuple(quotients))


def cf_expand_normalized(x: Fraction | int) -> ContinuedFraction:
    """Even-length continued fraction of a rational in [0, 1); 0 gives the empty expansion.

    Raises:
        DomainMismatchError: If x is not an exact rational in [0, 1)
    """
    if not is_exact(x) or not 0 <= x < 1:
        raise DomainMismatchError(f'Expected an exact rational in [0, 1), got {x!r}')
    return cf_expand(Fraction(x)).normalized()


def odd_index_divisible(cf: ContinuedFraction, k: int) -> bool:
    """Whether k divides a_1, a_3, a_5, ... (vacuously true for the empty expansion).

    Raises:
        NotNormalizedError: If the expansion has an odd number of quotients
    """
    if not cf.is_normalized:
        raise NotNormalizedError(f'{cf} has {len(cf.quotients)} partial quotients; normalize it first')
    return all(a % k == 0 for a in cf.quotients[::2])
