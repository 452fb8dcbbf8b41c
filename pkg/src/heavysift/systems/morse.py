"""Morse sequence 0110 1001 ... and its shift.

The sequence is the fixed point of 0 -> 01, 1 -> 10; equivalently each prefix of
length 2^(m+1) is the prefix of length 2^m followed by its complement, which is
how the stream grows.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING
from typing import Any
from typing import ClassVar

import numpy as np

from heavysift.errors import DomainMismatchError
from heavysift.errors import HorizonError
from heavysift.systems.base import DynamicalSystem

if TYPE_CHECKING:
    from heavysift.core.observables import CylinderObservable

logger = logging.getLogger(__name__)

COMPLEMENT = bytes.maketrans(b'\x00\x01', b'\x01\x00')


class SymbolicStream:
    """Lazily extended Morse sequence, indexed from 0."""

    def __init__(self) -> None:
        """Start from the single symbol 0."""
        self._bits = bytearray(b'\x00')

    def __len__(self) -> int:
        return len(self._bits)

    def ensure(self, length: int) -> None:
        """Grow the stored prefix (by doubling) until it has at least ``length`` symbols."""
        while len(self._bits) < length:
            self._bits += self._bits.translate(COMPLEMENT)

    def bit(self, index: int) -> int:
        """Symbol at position ``index``."""
        if index < 0:
            raise DomainMismatchError(f'Shift offsets are nonnegative, got {index}')
        self.ensure(index + 1)
        return self._bits[index]

    def word_at(self, offset: int, length: int) -> str:
        """The word y_{offset} ... y_{offset+length-1} as a bit string."""
        self.ensure(offset + length)
        return ''.join(str(b) for b in self._bits[offset : offset + length])

    def prefix(self, length: int) -> str:
        """First ``length`` symbols as a bit string."""
        return self.word_at(0, length)

    def as_array(self, length: int) -> np.ndarray:
        """First ``length`` symbols as a uint8 array."""
        self.ensure(length)
        return np.frombuffer(bytes(self._bits[:length]), dtype=np.uint8)


MORSE_STREAM = SymbolicStream()


def morse_prefix(length: int) -> str:
    """The first ``length`` Morse symbols, e.g. 8 -> '01101001'.

    Raises:
        HorizonError: If length < 1
    """
    if length < 1:
        raise HorizonError(f'Prefix length must be at least 1, got {length}')
    return MORSE_STREAM.prefix(length)


def morse_bit_by_parity(index: int) -> int:
    """Independent characterization: parity of the binary digit sum of ``index``."""
    return index.bit_count() & 1


@dataclass(frozen=True)
class MorseShiftSystem(DynamicalSystem):
    """Shift on the orbit of the Morse sequence; the point p stands for T^p(x)."""

    stream: SymbolicStream = MORSE_STREAM

    domain: ClassVar[str] = 'symbolic'
    invertible: ClassVar[bool] = False

    @property
    def exact(self) -> bool:
        return True

    def step(self, point: Any) -> int:
        return point + 1

    def contains(self, point: Any) -> bool:
        return isinstance(point, int) and not isinstance(point, bool) and point >= 0

    def observable(self, word: str = '1', mean: Fraction = Fraction(1, 2)) -> 'CylinderObservable':
        """Indicator of the cylinder {y : y_1 ... = word}; the default has mean 1/2."""
        from heavysift.core.observables import CylinderObservable

        return CylinderObservable(word=word, frequency=mean, stream=self.stream)

    def describe(self) -> str:
        return 'Morse shift'


def morse_shift_system() -> MorseShiftSystem:
    """The Morse shift over the shared stream."""
    return MorseShiftSystem()


@dataclass(frozen=True)
class MorseScanRow:
    """Heaviness of one shifted Morse point for A = {y_1 = 1}."""

    position: int
    min_deficit: Fraction
    heavy: bool
    zero_returns: int


def scan_morse_heaviness(start_word: str, positions: int, horizon: int) -> list[MorseScanRow]:
    """Check every shift starting with ``start_word`` for heaviness through ``horizon``.

    Deficits sum bit - 1/2, so they are kept doubled as int64 prefix sums and
    halved only when reported; nothing is rounded.

    Args:
        start_word: Word the shifted sequence must begin with (e.g. '11')
        positions: Offsets p < positions are examined
        horizon: Deficits d_1 .. d_horizon are checked

    Returns:
        One row per matching position, in increasing order
    """
    if horizon < 1:
        raise HorizonError(f'Horizon must be at least 1, got {horizon}')
    if not start_word or set(start_word) - {'0', '1'}:
        raise DomainMismatchError(f'Start word must be a nonempty bit string, got {start_word!r}')

    length = positions + max(horizon, len(start_word))
    bits = MORSE_STREAM.as_array(length).astype(np.int64)
    doubled_prefix = np.concatenate(([0], np.cumsum(2 * bits - 1)))

    matches = np.ones(positions, dtype=bool)
    for shift, symbol in enumerate(start_word):
        matches &= bits[shift : shift + positions] == int(symbol)

    rows = []
    for position in np.flatnonzero(matches):
        window = doubled_prefix[position + 1 : position + horizon + 1] - doubled_prefix[position]
        lowest = int(window.min())
        rows.append(
            MorseScanRow(
                position=int(position),
                min_deficit=Fraction(lowest, 2),
                heavy=lowest >= 0,
                zero_returns=int(np.count_nonzero(window == 0)),
            )
        )

    logger.debug('Scanned %d Morse positions starting with %s through %d', len(rows), start_word, horizon)
    return rows
