"""Tests for the continued-fraction cross-check of the multiples decision."""

import math
from fractions import Fraction

import pytest

from heavysift.errors import DomainMismatchError
from heavysift.multiples.sweep import SWEEP_COLUMNS
from heavysift.multiples.sweep import characterization_row
from heavysift.multiples.sweep import characterization_sweep


def test_row_for_two_fifths():
    """Test 2/5 with k = 2: heavy and divisible."""
    row = characterization_row(2, 5, 2)
    assert row.heavy
    assert row.divisible
    assert row.agree
    assert row.delta == Fraction(1, 2)
    assert row.quotients == (2, 2)


def test_row_for_one_half():
    """Test 1/2 with k = 2: neither heavy nor divisible."""
    row = characterization_row(1, 2, 2)
    assert not row.heavy
    assert not row.divisible
    assert row.first_failure == 1
    assert row.quotients == (1, 1)


def test_row_reduces_fraction():
    """Test that p/q is stored in lowest terms."""
    row = characterization_row(4, 10, 2)
    assert (row.p, row.q) == (2, 5)


def test_row_dict_follows_columns():
    """Test that rows export exactly the sweep columns."""
    assert tuple(characterization_row(2, 5, 3).to_dict()) == SWEEP_COLUMNS


def test_small_sweep_agrees():
    """Test every reduced fraction with q <= 30 for k = 2."""
    report = characterization_sweep(2, 30)
    expected = sum(1 for q in range(2, 31) for p in range(1, q) if math.gcd(p, q) == 1)
    assert report.total == expected
    assert report.passed
    assert report.mismatches == []
    assert [(row.p, row.q) for row in report.rows[:3]] == [(1, 2), (1, 3), (2, 3)]


@pytest.mark.parametrize(('k', 'q_max'), [(1, 10), (2, 1)])
def test_sweep_rejects_bad_arguments(k, q_max):
    """Test that k and q_max must be at least 2."""
    with pytest.raises(DomainMismatchError):
        characterization_sweep(k, q_max)


@pytest.mark.slow
@pytest.mark.parametrize('k', [2, 3, 4])
def test_sweep_agrees_up_to_300(k):
    """Test full agreement for every reduced p/q with q <= 300."""
    report = characterization_sweep(k, 300)
    assert report.passed, [(row.p, row.q) for row in report.mismatches]
