"""Tests for heavy-point searches."""

import math
from fractions import Fraction

import numpy as np
import pytest

from heavysift.core.observables import IndicatorObservable
from heavysift.core.search import find_heavy_candidate
from heavysift.core.search import scan_candidates
from heavysift.core.search import two_sided_search
from heavysift.core.trace import heavy_through
from heavysift.core.trace import heavy_window
from heavysift.errors import EmptyCandidatesError
from heavysift.errors import HorizonError
from heavysift.errors import NonInvertibleSystemError
from heavysift.systems.circle import IntervalUnion
from heavysift.systems.circle import circle_grid
from heavysift.systems.circle import rotation_system
from heavysift.systems.circle import times_m_system
from heavysift.systems.torus import skew_product_system
from heavysift.systems.torus import torus_grid_array


def indicator(start: Fraction, end: Fraction) -> IndicatorObservable:
    return IndicatorObservable(IntervalUnion.from_pairs([(start, end)]))


def test_scan_rotation_grid():
    """Test per-candidate verdicts on the grid of the rotation by 1/3."""
    verdicts = scan_candidates(rotation_system(Fraction(1, 3)), indicator(Fraction(0), Fraction(1, 3)), 6, circle_grid(3))
    assert [v.heavy for v in verdicts] == [True, False, False]
    assert [v.psi for v in verdicts] == [None, 1, 1]
    assert verdicts[0].min_deficit == 0
    assert not any(v.numerical for v in verdicts)


def test_scan_rejects_empty_candidates():
    """Test that an empty candidate list raises."""
    with pytest.raises(EmptyCandidatesError):
        scan_candidates(rotation_system(Fraction(1, 3)), indicator(Fraction(0), Fraction(1, 3)), 3, [])
    with pytest.raises(EmptyCandidatesError):
        find_heavy_candidate(rotation_system(Fraction(1, 3)), indicator(Fraction(0), Fraction(1, 3)), 3, np.zeros(0))


def test_scan_rejects_zero_horizon():
    """Test that N = 0 raises."""
    with pytest.raises(HorizonError):
        scan_candidates(rotation_system(Fraction(1, 3)), indicator(Fraction(0), Fraction(1, 3)), 0, [Fraction(0)])


def test_find_heavy_candidate_on_rotation_grid():
    """Test that the grid search picks the heavy point 0."""
    result = find_heavy_candidate(rotation_system(Fraction(1, 3)), indicator(Fraction(0), Fraction(1, 3)), 9, circle_grid(6))
    assert result.point == 0
    assert result.index == 0
    assert result.heavy


def test_find_heavy_candidate_two_point_identity(two_point_identity):
    """Test the two-point identity: atom 0 wins with min deficit 1."""
    result = find_heavy_candidate(two_point_identity, two_point_identity.observable(), 5, [0, 1])
    assert result.point == 0
    assert result.report.min_deficit == 1
    assert result.heavy


def test_find_heavy_candidate_breaks_ties_by_lowest_index(swap_system):
    """Test that equal scores go to the first candidate."""
    result = find_heavy_candidate(swap_system, swap_system.observable(), 4, [1, 0, 0])
    assert result.index == 1
    assert result.point == 0


def test_batch_scores_match_scalar_scores():
    """Test that the vectorised path agrees with orbit-by-orbit scoring."""
    system = rotation_system(math.sqrt(2))
    f = indicator(Fraction(0), Fraction(1, 2))
    points = np.arange(40) / 40 + 0.003
    batch = scan_candidates(system, f, 60, points)
    scalar = scan_candidates(system, f, 60, [float(point) for point in points])
    assert [v.psi for v in batch] == [v.psi for v in scalar]
    assert [v.min_deficit for v in batch] == pytest.approx([v.min_deficit for v in scalar])
    assert all(v.numerical for v in batch)


def test_batch_search_on_torus_recomputes_winner():
    """Test that the torus batch search returns a tuple point with its own report."""
    system = skew_product_system(math.sqrt(2), 2)
    f = indicator(Fraction(0), Fraction(1, 4))
    result = find_heavy_candidate(system, f, 50, torus_grid_array(16, 2))
    assert isinstance(result.point, tuple)
    assert len(result.point) == 2
    assert result.report.numerical
    assert result.heavy == heavy_through(system, result.point, f, 50)


def test_two_sided_search_on_swap(swap_system):
    """Test the 2-cycle: the walk returns atom 0 at an even time."""
    found = two_sided_search(swap_system, swap_system.observable(), 1, 0, 10)
    assert found is not None
    assert found.point == 0
    assert (found.first_time, found.second_time, found.min_time) == (0, 2, 0)
    assert found.window == 1
    assert heavy_window(swap_system, found.point, swap_system.observable(), -1, 1)


def test_two_sided_search_from_the_other_atom(swap_system):
    """Test that starting at atom 1 still ends on a two-sided heavy point."""
    f = swap_system.observable()
    found = two_sided_search(swap_system, f, 3, 1, 10)
    assert found is not None
    assert heavy_window(swap_system, found.point, f, -found.window, found.window)
    assert found.window == 3


def test_two_sided_search_fails_on_two_point_identity(two_point_identity):
    """Test that neither atom's orbit reaches both one-sided heavy sets."""
    f = two_point_identity.observable()
    assert two_sided_search(two_point_identity, f, 1, 0, 20) is None
    assert two_sided_search(two_point_identity, f, 1, 1, 20) is None


def test_two_sided_search_preconditions(swap_system):
    """Test the search's input checks."""
    with pytest.raises(NonInvertibleSystemError):
        two_sided_search(times_m_system(2), indicator(Fraction(0), Fraction(1, 2)), 1, Fraction(0), 5)
    with pytest.raises(HorizonError):
        two_sided_search(swap_system, swap_system.observable(), 1, 0, 0)


@pytest.mark.slow
def test_skew_product_grid_has_heavy_point():
    """Test alpha = sqrt(2), k = 2, target [0, 1/4): a 512 x 512 grid holds a point heavy through 2000."""
    system = skew_product_system(math.sqrt(2), 2)
    f = indicator(Fraction(0), Fraction(1, 4))
    result = find_heavy_candidate(system, f, 2000, torus_grid_array(512, 2))
    assert result.heavy
    assert result.report.min_deficit >= -1e-9
