"""Tests for exact and approximate number parsing."""

import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import settings
from hypothesis import strategies as st

from heavysift.errors import SpecParseError
from heavysift.utils.numbers import format_value
from heavysift.utils.numbers import is_exact
from heavysift.utils.numbers import parse_value
from heavysift.utils.numbers import parse_values
from heavysift.utils.numbers import reduce_mod1


def test_parse_fraction_stays_exact():
    """Test that p/q strings parse to Fractions."""
    assert parse_value('1/3') == Fraction(1, 3)
    assert isinstance(parse_value('1/3'), Fraction)


def test_parse_decimal_is_exact():
    """Test that decimals parse exactly rather than through a float."""
    assert parse_value('0.1') == Fraction(1, 10)
    assert parse_value(' 2 ') == Fraction(2)


def test_parse_sqrt_is_approximate():
    """Test that sqrt(r) parses to a float."""
    value = parse_value('sqrt(2)')
    assert isinstance(value, float)
    assert value == math.sqrt(2)
    assert parse_value('sqrt(1/4)') == 0.5


def test_parse_tilde_is_approximate():
    """Test that a ~ prefix forces a float."""
    value = parse_value('~0.25')
    assert isinstance(value, float)
    assert value == 0.25


@pytest.mark.parametrize('text', ['', 'abc', '1/0', 'sqrt(-1)', '~x', '1//2'])
def test_parse_rejects_malformed(text):
    """Test that malformed numbers raise SpecParseError."""
    with pytest.raises(SpecParseError):
        parse_value(text)


def test_parse_values_splits_on_commas():
    """Test parsing a comma-separated list."""
    assert parse_values('1/2,-1/3,0') == [Fraction(1, 2), Fraction(-1, 3), Fraction(0)]
    assert parse_values('  ') == []


def test_is_exact_excludes_floats_and_bools():
    """Test that only ints and Fractions count as exact."""
    assert is_exact(3)
    assert is_exact(Fraction(1, 7))
    assert not is_exact(0.5)
    assert not is_exact(True)


def test_reduce_mod1_fractions():
    """Test exact reduction into [0, 1)."""
    assert reduce_mod1(Fraction(5, 3)) == Fraction(2, 3)
    assert reduce_mod1(Fraction(-1, 3)) == Fraction(2, 3)
    assert reduce_mod1(-1) == 0


def test_reduce_mod1_folds_float_rounding_to_zero():
    """Test that a float that rounds up to 1.0 is folded back to 0.0."""
    assert reduce_mod1(-1e-20) == 0.0
    assert 0.0 <= reduce_mod1(-0.25) < 1.0


def test_format_value_renders_fractions():
    """Test that Fractions are rendered as p/q strings."""
    assert format_value(Fraction(2, 4)) == '1/2'
    assert format_value(Fraction(3)) == '3'
    assert format_value(0.5) == 0.5
    assert format_value('x') == 'x'


@settings(derandomize=True)
@given(st.fractions())
def test_reduce_mod1_lands_in_unit_interval(value):
    """Test that reduction stays in [0, 1) and differs from the input by an integer."""
    reduced = reduce_mod1(value)
    assert 0 <= reduced < 1
    assert (value - reduced).denominator == 1


@settings(derandomize=True)
@given(st.fractions())
def test_parse_value_round_trips_fraction_strings(value):
    """Test that str(Fraction) parses back to the same Fraction."""
    assert parse_value(str(value)) == value
