"""Tests for even-length continued fractions."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import settings
from hypothesis import strategies as st

from heavysift.errors import DomainMismatchError
from heavysift.errors import NotNormalizedError
from heavysift.multiples.continued_fraction import ContinuedFraction
from heavysift.multiples.continued_fraction import cf_expand
from heavysift.multiples.continued_fraction import cf_expand_normalized
from heavysift.multiples.continued_fraction import odd_index_divisible


@pytest.mark.parametrize(
    ('x', 'expected'),
    [
        (Fraction(2, 5), (2, 2)),
        (Fraction(1, 2), (1, 1)),
        (Fraction(1, 3), (2, 1)),
        (Fraction(3, 7), (2, 3)),
        (Fraction(2, 3), (1, 2)),
        (Fraction(3, 5), (1, 1, 1, 1)),
        (Fraction(0), ()),
    ],
)
def test_normalized_expansions(x, expected):
    """Test even-length expansions of small rationals."""
    cf = cf_expand_normalized(x)
    assert cf.a0 == 0
    assert cf.quotients == expected
    assert cf.value() == x


def test_plain_expansion_ends_above_one():
    """Test that the Euclidean expansion keeps its last quotient >= 2."""
    assert cf_expand(Fraction(1, 2)).quotients == (2,)
    assert cf_expand(Fraction(7, 3)) == ContinuedFraction(2, (3,))


def test_normalize_merges_trailing_one():
    """Test that an odd expansion ending in 1 merges into the previous quotient."""
    cf = ContinuedFraction(0, (2, 1, 1))
    assert cf.normalized() == ContinuedFraction(0, (2, 2))
    assert ContinuedFraction(0, (1,)).normalized() == ContinuedFraction(1, ())


def test_convergents_and_str():
    """Test convergents and the printed form of [0; 2, 2]."""
    cf = ContinuedFraction.from_quotients(0, [2, 2])
    assert cf.convergents() == [Fraction(0), Fraction(1, 2), Fraction(2, 5)]
    assert str(cf) == '[0; 2, 2]'


def test_rejects_nonpositive_quotients():
    """Test that partial quotients must be positive."""
    with pytest.raises(DomainMismatchError):
        ContinuedFraction(0, (2, 0))


@pytest.mark.parametrize('x', [Fraction(1), Fraction(-1, 3), 0.5, Fraction(4, 3)])
def test_normalized_rejects_outside_unit_interval(x):
    """Test that only exact rationals in [0, 1) expand."""
    with pytest.raises(DomainMismatchError):
        cf_expand_normalized(x)


def test_odd_index_divisible():
    """Test divisibility of a_1, a_3, ... by k."""
    assert odd_index_divisible(ContinuedFraction(0, (2, 2)), 2)
    assert not odd_index_divisible(ContinuedFraction(0, (2, 2)), 3)
    assert odd_index_divisible(ContinuedFraction(0, (4, 1)), 4)
    assert odd_index_divisible(ContinuedFraction(0, (6, 5, 3, 7)), 3)
    assert odd_index_divisible(ContinuedFraction(0, ()), 5)


def test_odd_index_divisible_requires_normalized():
    """Test that odd-length expansions are refused."""
    with pytest.raises(NotNormalizedError):
        odd_index_divisible(ContinuedFraction(0, (2,)), 2)


@given(q=st.integers(2, 500), data=st.data())
@settings(derandomize=True, max_examples=200)
def test_normalized_expansion_is_even_and_exact(q, data):
    """Test that every rational in [0, 1) gets an even expansion of the same value."""
    p = data.draw(st.integers(0, q - 1))
    cf = cf_expand_normalized(Fraction(p, q))
    assert cf.is_normalized
    assert cf.a0 == 0
    assert cf.value() == Fraction(p, q)
    assert cf.convergents()[-1] == Fraction(p, q)
