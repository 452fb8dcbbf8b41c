"""Pytest configuration and fixtures.

Common fixtures used across all tests.
"""

from pathlib import Path

import pytest

from heavysift.finite.system import FiniteSystem


@pytest.fixture
def swap_system() -> FiniteSystem:
    """The 2-cycle 0 <-> 1 with f = (1, -1)."""
    return FiniteSystem.swap((1, -1))


@pytest.fixture
def two_point_identity() -> FiniteSystem:
    """Two fixed points with f = (1, -1); not ergodic."""
    return FiniteSystem.identity([1, -1])


@pytest.fixture
def three_cycle() -> FiniteSystem:
    """The 3-cycle 0 -> 1 -> 2 -> 0 with f = (2, -1, -1)."""
    return FiniteSystem.from_cycles([[2, -1, -1]])


@pytest.fixture(autouse=True)
def isolate_config(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> Path:
    """Keep every test away from the user's config file and HEAVYSIFT_* variables.

    HOME points at an empty temporary directory, so the default config path
    never exists unless a test writes it.
    """
    monkeypatch.setenv('HOME', str(tmp_path))
    for name in ('HEAVYSIFT_TOLERANCE', 'HEAVYSIFT_CONFIG_FILE', 'HEAVYSIFT_NO_CONFIG', 'HEAVYSIFT_OUTPUT_FORMAT'):
        monkeypatch.delenv(name, raising=False)
    return tmp_path
