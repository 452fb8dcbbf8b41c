"""Exact and approximate number handling.

Fractions stay fractions end to end; only explicitly approximate inputs
(``sqrt(...)`` or a ``~`` prefix) are turned into floats.
"""

import math
import re
from fractions import Fraction

from heavysift.errors import SpecParseError

type Number = Fraction | int | float

SQRT_FORM = re.compile(r'^sqrt\((?P<radicand>[^()]+)\)$')


def is_exact(value: object) -> bool:
    """Return True for ints and Fractions (bools are not numbers here)."""
    return isinstance(value, int | Fraction) and not isinstance(value, bool)


def reduce_mod1(value: Number) -> Fraction | float:
    """Reduce a value into [0, 1).

    Floats can land on 1.0 after rounding (for instance ``-1e-20 % 1.0``),
    which is folded back to 0.0.
    """
    if isinstance(value, float):
        reduced = value % 1.0
        return 0.0 if reduced >= 1.0 else reduced
    return Fraction(value) % 1


def parse_value(text: str) -> Fraction | float:
    """Parse a number from its textual form.

    Args:
        text: "p/q", an integer, a decimal (parsed exactly), ``sqrt(r)`` or ``~decimal``

    Returns:
        A Fraction for exact forms, a float for approximate forms

    Raises:
        SpecParseError: If the text is not a recognised number
    """
    cleaned = text.strip()
    if not cleaned:
        raise SpecParseError('Empty number')

    if cleaned.startswith('~'):
        try:
            return float(cleaned[1:])
        except ValueError as e:
            raise SpecParseError(f'Malformed approximate number: {text!r}') from e

    match = SQRT_FORM.match(cleaned)
    if match:
        radicand = parse_value(match.group('radicand'))
        if radicand < 0:
            raise SpecParseError(f'Negative radicand in {text!r}')
        return math.sqrt(float(radicand))

    try:
        return Fraction(cleaned)
    except (ValueError, ZeroDivisionError) as e:
        raise SpecParseError(f'Malformed fraction: {text!r}') from e


def parse_values(text: str, separator: str = ',') -> list[Fraction | float]:
    """Parse a separated list of numbers; an empty string yields an empty list."""
    if not text.strip():
        return []
    return [parse_value(part) for part in text.split(separator)]


def format_value(value: object) -> object:
    """Render a number for emission: Fractions as "p/q" strings, everything else untouched."""
    if isinstance(value, Fraction):
        return str(value)
    return value
