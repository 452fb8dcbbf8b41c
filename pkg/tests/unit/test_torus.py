"""Tests for the torus skew product and polynomial sequences."""

import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import settings
from hypothesis import strategies as st

from heavysift.errors import DomainMismatchError
from heavysift.errors import InvalidSystemError
from heavysift.systems.torus import coeffs_to_point
from heavysift.systems.torus import point_to_sequence
from heavysift.systems.torus import polynomial_orbit
from heavysift.systems.torus import polynomial_value
from heavysift.systems.torus import skew_product_system
from heavysift.systems.torus import torus_grid
from heavysift.systems.torus import torus_grid_array

unit_fractions = st.fractions(min_value=0, max_value=1, max_denominator=97).filter(lambda value: value < 1)


def test_skew_step():
    """Test two steps of the k = 2 skew product."""
    system = skew_product_system(Fraction(1, 3), 2)
    first = system.step((Fraction(0), Fraction(0)))
    assert first == (Fraction(1, 3), Fraction(0))
    assert system.step(first) == (Fraction(2, 3), Fraction(1, 3))


def test_skew_projects_last_coordinate():
    """Test that observables see the last coordinate."""
    system = skew_product_system(Fraction(1, 5), 3)
    assert system.project((Fraction(1, 2), Fraction(1, 3), Fraction(1, 4))) == Fraction(1, 4)


def test_skew_requires_positive_dimension():
    """Test that k = 0 is rejected."""
    with pytest.raises(InvalidSystemError):
        skew_product_system(Fraction(1, 2), 0)


def test_skew_contains_checks_dimension():
    """Test that points must have k coordinates in [0, 1)."""
    system = skew_product_system(Fraction(1, 2), 2)
    assert system.contains((Fraction(0), Fraction(1, 2)))
    assert not system.contains((Fraction(0),))
    assert not system.contains((Fraction(0), Fraction(1)))


@settings(derandomize=True)
@given(unit_fractions, st.lists(unit_fractions, min_size=1, max_size=4))
def test_inverse_step_undoes_step(alpha, point):
    """Test that T^{-1} T is the identity on exact points."""
    system = skew_product_system(alpha, len(point))
    assert system.inverse_step(system.step(tuple(point))) == tuple(point)


# Largest q per dimension that keeps q**k grid points manageable.
GRID_LIMITS = {1: 64, 2: 64, 3: 16, 4: 8}


@settings(derandomize=True, max_examples=30, deadline=None)
@given(st.data())
def test_rational_skew_product_permutes_its_grid(data):
    """Test that the skew product with alpha = p/q is a bijection of the denominator-q torus grid."""
    k = data.draw(st.integers(min_value=1, max_value=4))
    q = data.draw(st.integers(min_value=1, max_value=GRID_LIMITS[k]))
    p = data.draw(st.integers(min_value=0, max_value=q - 1))
    system = skew_product_system(Fraction(p, q), k)
    grid = torus_grid(q, k)
    images = [system.step(point) for point in grid]
    assert sorted(images) == grid
    assert [system.inverse_step(image) for image in images] == grid


def test_coeffs_to_point_for_quadratic():
    """Test the finite-difference start point of p(n) = n^2/7 + n/3."""
    start = coeffs_to_point(Fraction(1, 7), [Fraction(0), Fraction(1, 3)])
    # q_1(0) = p(1) - p(0) = 1/7 + 1/3, q_2(0) = p(0) = 0
    assert start == (Fraction(10, 21), Fraction(0))


def test_coeffs_to_point_requires_coefficients():
    """Test that k = 0 is rejected."""
    with pytest.raises(DomainMismatchError):
        coeffs_to_point(Fraction(1, 2), [])


def test_polynomial_orbit_matches_direct_evaluation():
    """Test that the last coordinate runs through p(n) mod 1."""
    alpha, coefficients = Fraction(1, 7), [Fraction(0), Fraction(1, 3)]
    system, start = polynomial_orbit(alpha, coefficients)
    assert system.alpha == Fraction(2, 7)
    sequence = point_to_sequence(system, start, 20)
    assert sequence == [polynomial_value(alpha, coefficients, n) for n in range(20)]


def test_linear_polynomial_is_a_rotation():
    """Test that k = 1 reduces to the rotation by alpha started at a_0."""
    system, start = polynomial_orbit(Fraction(2, 9), [Fraction(1, 4)])
    assert system.alpha == Fraction(2, 9)
    assert start == (Fraction(1, 4),)


def test_polynomial_orbit_with_irrational_alpha():
    """Test the float path against direct evaluation up to rounding."""
    alpha, coefficients = math.sqrt(2), [Fraction(0), Fraction(0)]
    system, start = polynomial_orbit(alpha, coefficients)
    sequence = point_to_sequence(system, start, 30)
    for n, value in enumerate(sequence):
        direct = polynomial_value(alpha, coefficients, n)
        gap = abs(value - direct) % 1.0
        assert min(gap, 1.0 - gap) < 1e-9


def test_point_to_sequence_checks_dimension():
    """Test that a point of the wrong dimension is rejected."""
    system = skew_product_system(Fraction(1, 3), 2)
    with pytest.raises(DomainMismatchError):
        point_to_sequence(system, (Fraction(0),), 5)


@settings(derandomize=True, max_examples=100, deadline=None)
@given(unit_fractions, st.lists(unit_fractions, min_size=1, max_size=4), st.integers(min_value=1, max_value=50))
def test_skew_product_oracle(alpha, coefficients, length):
    """Test the skew-product sequence against direct evaluation, k <= 4 and n <= 50."""
    system, start = polynomial_orbit(alpha, coefficients)
    assert point_to_sequence(system, start, length) == [polynomial_value(alpha, coefficients, n) for n in range(length)]


def test_torus_grid_order():
    """Test the lexicographic rational grid."""
    half = Fraction(1, 2)
    assert torus_grid(2, 2) == [(0, 0), (0, half), (half, 0), (half, half)]


def test_torus_grid_array_matches_rational_grid():
    """Test that the float grid lists the same points in the same order."""
    array = torus_grid_array(3, 2)
    assert array.shape == (9, 2)
    expected = [[float(value) for value in point] for point in torus_grid(3, 2)]
    assert np.allclose(array, expected)


def test_step_batch_matches_scalar_step():
    """Test the vectorised step against the scalar one."""
    system = skew_product_system(math.sqrt(2), 3).approximate()
    points = torus_grid_array(4, 3)
    advanced = system.step_batch(points)
    for row, point in zip(advanced, points, strict=True):
        assert np.allclose(row, system.step(tuple(float(value) for value in point)))
    assert np.allclose(system.project_batch(points), points[:, -1])
