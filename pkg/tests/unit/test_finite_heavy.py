"""Tests for exact ψ values and heavy sets."""

from fractions import Fraction

import pytest

from heavysift.errors import DomainMismatchError
from heavysift.errors import HorizonError
from heavysift.finite.heavy import heavy_set_exact
from heavysift.finite.heavy import psi_exact
from heavysift.finite.heavy import psi_table
from heavysift.finite.heavy import restrict_psi
from heavysift.finite.heavy import window_set_exact
from heavysift.finite.system import FiniteSystem


def test_psi_on_swap(swap_system):
    """Test ψ on the 2-cycle: atom 1 fails at once, atom 0 never does."""
    assert psi_exact(swap_system, 1, 1) == 1
    assert psi_exact(swap_system, 0, 10) is None
    assert psi_table(swap_system, 4) == {0: None, 1: 1}


def test_psi_horizon_zero_is_beyond_horizon(swap_system):
    """Test that N = 0 reports every atom as beyond-horizon."""
    assert psi_exact(swap_system, 1, 0) is None
    assert heavy_set_exact(swap_system, 0) == frozenset({0, 1})


def test_psi_rejects_bad_input(swap_system):
    """Test the atom and horizon checks."""
    with pytest.raises(DomainMismatchError):
        psi_exact(swap_system, 2, 3)
    with pytest.raises(HorizonError):
        psi_exact(swap_system, 0, -1)


def test_psi_on_four_cycle():
    """Test ψ where failures come at different times."""
    system = FiniteSystem.from_cycles([[1, -3, 1, 1]])
    assert psi_table(system, 4) == {0: 2, 1: 1, 2: None, 3: 3}
    assert heavy_set_exact(system, 4) == frozenset({2})
    assert heavy_set_exact(system, 2) == frozenset({2, 3})


def test_restrict_psi_drops_late_failures():
    """Test that failures after the smaller horizon become beyond-horizon."""
    assert restrict_psi({0: None, 1: 3, 2: 1}, 2) == {0: None, 1: None, 2: 1}


def test_restrict_psi_matches_direct_table():
    """Test that restricting a long table equals computing the short one."""
    system = FiniteSystem.from_cycles([[3, -1, -2, 2, -2], [1, -1]])
    long_table = psi_table(system, 12)
    for horizon in range(1, 13):
        assert restrict_psi(long_table, horizon) == psi_table(system, horizon)


def test_heavy_sets_are_nested():
    """Test that H(N) shrinks as N grows."""
    system = FiniteSystem.from_cycles([[3, -1, -2, 2, -2]])
    sets = [heavy_set_exact(system, horizon) for horizon in range(1, 9)]
    assert all(later <= earlier for earlier, later in zip(sets, sets[1:], strict=False))
    assert sets[-1]


def test_window_set_on_swap(swap_system):
    """Test that atom 0 is the two-sided heavy atom of the swap."""
    assert window_set_exact(swap_system, -4, 4) == frozenset({0})


def test_window_set_on_three_cycle(three_cycle):
    """Test the two-sided heavy set of the 3-cycle."""
    assert window_set_exact(three_cycle, -2, 2) == frozenset({0})


def test_two_point_identity_is_heavy_in_one_direction_only(two_point_identity):
    """Test that atom 0 is in every H(N) while H(-1, 1) is empty."""
    assert window_set_exact(two_point_identity, -1, 1) == frozenset()
    for horizon in (1, 3, 10):
        assert heavy_set_exact(two_point_identity, horizon) == frozenset({0})
    assert window_set_exact(two_point_identity, 0, 10) == frozenset({0})
    # atom 1 is heavy for negative times only
    assert window_set_exact(two_point_identity, -10, 0) == frozenset({1})


def test_window_set_empty_for_invariant_indicator():
    """Test that H(-1, 1) is empty when f is an invariant indicator minus its mean."""
    system = FiniteSystem.invariant_indicator([2, 3], {0})
    assert window_set_exact(system, -1, 1) == frozenset()
    assert heavy_set_exact(system, 5) == frozenset({0, 1})


def test_window_set_rejects_empty_window(swap_system):
    """Test that n1 > n2 raises."""
    with pytest.raises(HorizonError):
        window_set_exact(swap_system, 2, 1)


def test_weights_do_not_change_heavy_sets():
    """Test that heaviness reads only f along orbits."""
    system = FiniteSystem((1, 0, 2), (Fraction(1, 4), Fraction(1, 4), Fraction(1, 2)), (2, -2, 0))
    assert heavy_set_exact(system, 6) == frozenset({0, 2})
