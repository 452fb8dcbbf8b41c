"""Dynamical system interface shared by every concrete system.

A system is an immutable descriptor: stepping is a pure function of the
point, so orbits of different points can be computed independently.
"""

from abc import ABC
from abc import abstractmethod
from typing import Any
from typing import ClassVar

from heavysift.errors import NonInvertibleSystemError


class DynamicalSystem(ABC):
    """A measure-preserving map T together with the domain it acts on.

    Attributes:
        domain: Kind of point the system moves ('circle', 'torus', 'finite', 'symbolic')
        invertible: Whether ``inverse_step`` is available
    """

    domain: ClassVar[str]
    invertible: ClassVar[bool] = True

    @property
    @abstractmethod
    def exact(self) -> bool:
        """True when every parameter is rational, so exact points stay exact."""

    @abstractmethod
    def step(self, point: Any) -> Any:
        """Apply T once."""

    def inverse_step(self, point: Any) -> Any:
        """Apply T^{-1} once.

        Raises:
            NonInvertibleSystemError: If the system is not invertible
        """
        raise NonInvertibleSystemError(f'{self.describe()} is not invertible')

    @abstractmethod
    def contains(self, point: Any) -> bool:
        """Check that a point lies in the system's domain."""

    def project(self, point: Any) -> Any:
        """Return the part of the point observables are evaluated on."""
        return point

    def project_batch(self, points: Any) -> Any:
        """Vectorised ``project`` over an array of points."""
        return points

    def orbit(self, point: Any, length: int) -> list[Any]:
        """Return the first ``length`` orbit points x, Tx, ..., T^{length-1}x."""
        points = []
        current = point
        for _ in range(length):
            points.append(current)
            current = self.step(current)
        return points

    def backward_orbit(self, point: Any, length: int) -> list[Any]:
        """Return T^{-1}x, ..., T^{-length}x."""
        points = []
        current = point
        for _ in range(length):
            current = self.inverse_step(current)
            points.append(current)
        return points

    def require_invertible(self) -> None:
        """Raise unless the system supports negative times."""
        if not self.invertible:
            raise NonInvertibleSystemError(f'{self.describe()} is not invertible; negative times are undefined')

    def reverse(self) -> 'DynamicalSystem':
        """The inverse map T^{-1} as a system of its own."""
        self.require_invertible()
        return InverseSystem(self)

    def approximate(self) -> 'DynamicalSystem':
        """Return a float-parameter copy used in approximate mode (identity by default)."""
        return self

    def coerce_point(self, point: Any, exact: bool) -> Any:
        """Convert a point to the representation used by the chosen numeric mode."""
        return point

    @abstractmethod
    def describe(self) -> str:
        """Short human-readable name, used in messages and reports."""


class InverseSystem(DynamicalSystem):
    """T^{-1} presented as a forward system; stepping and inverse stepping swap roles."""

    def __init__(self, base: DynamicalSystem) -> None:
        """Wrap an invertible system."""
        self.base = base

    def __getattr__(self, name: str) -> Any:
        # Expose the wrapped system's own attributes (atom count, rotation number, ...).
        if name == 'base':
            raise AttributeError(name)
        return getattr(self.base, name)

    @property
    def domain(self) -> str:  # type: ignore[override]
        return self.base.domain

    @property
    def exact(self) -> bool:
        return self.base.exact

    def step(self, point: Any) -> Any:
        return self.base.inverse_step(point)

    def inverse_step(self, point: Any) -> Any:
        return self.base.step(point)

    def contains(self, point: Any) -> bool:
        return self.base.contains(point)

    def project(self, point: Any) -> Any:
        return self.base.project(point)

    def reverse(self) -> DynamicalSystem:
        return self.base

    def approximate(self) -> DynamicalSystem:
        return InverseSystem(self.base.approximate())

    def coerce_point(self, point: Any, exact: bool) -> Any:
        return self.base.coerce_point(point, exact)

    def describe(self) -> str:
        return f'inverse of {self.base.describe()}'
