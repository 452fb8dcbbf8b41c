"""Exact ψ values and heavy sets of finite systems, by brute force over atoms."""

from heavysift.core.trace import deficit_trace
from heavysift.core.trace import heavy_window
from heavysift.core.trace import psi
from heavysift.errors import DomainMismatchError
from heavysift.errors import HorizonError
from heavysift.finite.system import FiniteSystem


def psi_exact(system: FiniteSystem, atom: int, horizon: int) -> int | None:
    """First time n <= N with d_n(atom) < 0, or None (beyond-horizon).

    Raises:
        DomainMismatchError: If the atom does not exist
        HorizonError: If N < 0
    """
    if not system.contains(atom):
        raise DomainMismatchError(f'Atom {atom} is not in 0..{system.n - 1}')
    if horizon < 0:
        raise HorizonError(f'Horizon must be nonnegative, got {horizon}')
    if horizon == 0:
        return None
    return psi(deficit_trace(system, atom, system.observable(), horizon)).psi


def psi_table(system: FiniteSystem, horizon: int) -> dict[int, int | None]:
    """ψ of every atom through N."""
    return {atom: psi_exact(system, atom, horizon) for atom in system.atoms()}


def restrict_psi(table: dict[int, int | None], horizon: int) -> dict[int, int | None]:
    """ψ through a smaller horizon, read off a table computed through a larger one."""
    return {atom: value if value is not None and value <= horizon else None for atom, value in table.items()}


def heavy_set_exact(system: FiniteSystem, horizon: int) -> frozenset[int]:
    """H(N): atoms whose deficits d_1..d_N are all nonnegative; H(0) is every atom."""
    return frozenset(atom for atom, value in psi_table(system, horizon).items() if value is None)


def window_set_exact(system: FiniteSystem, n1: int, n2: int) -> frozenset[int]:
    """H(n1, n2): atoms with d_i >= 0 for every i in [n1, n2]."""
    if n1 > n2:
        raise HorizonError(f'Empty window ({n1}, {n2})')
    f = system.observable()
    return frozenset(atom for atom in system.atoms() if heavy_window(system, atom, f, n1, n2))
