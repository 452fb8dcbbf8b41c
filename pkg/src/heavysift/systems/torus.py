"""Skew product on the k-torus and the polynomial sequences it generates.

T(x_1, ..., x_k) = (x_1 + alpha, x_2 + x_1, ..., x_k + x_{k-1}) mod 1. Its last
coordinate runs through a degree-k polynomial evaluated at n = 0, 1, 2, ...
"""

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any
from typing import ClassVar

import numpy as np

from heavysift.errors import DomainMismatchError
from heavysift.errors import InvalidSystemError
from heavysift.systems.base import DynamicalSystem
from heavysift.systems.circle import is_circle_point
from heavysift.systems.circle import mod1_batch
from heavysift.utils.numbers import Number
from heavysift.utils.numbers import is_exact
from heavysift.utils.numbers import reduce_mod1

type TorusPoint = tuple[Any, ...]


@dataclass(frozen=True)
class SkewProductSystem(DynamicalSystem):
    """The triangular torus map; invertible and Lebesgue measure preserving."""

    alpha: Fraction | float
    k: int

    domain: ClassVar[str] = 'torus'
    invertible: ClassVar[bool] = True

    def __post_init__(self) -> None:
        if isinstance(self.k, bool) or not isinstance(self.k, int) or self.k < 1:
            raise InvalidSystemError(f'Torus dimension must be a positive integer, got {self.k!r}')
        object.__setattr__(self, 'alpha', reduce_mod1(self.alpha))

    @property
    def exact(self) -> bool:
        return is_exact(self.alpha)

    def step(self, point: Any) -> TorusPoint:
        shifted = [point[0] + self.alpha]
        shifted.extend(point[index] + point[index - 1] for index in range(1, self.k))
        return tuple(reduce_mod1(value) for value in shifted)

    def inverse_step(self, point: Any) -> TorusPoint:
        # Top-down: each recovered coordinate feeds the next one.
        recovered = [reduce_mod1(point[0] - self.alpha)]
        for index in range(1, self.k):
            recovered.append(reduce_mod1(point[index] - recovered[index - 1]))
        return tuple(recovered)

    def step_batch(self, points: np.ndarray) -> np.ndarray:
        """Advance an (M, k) float array of torus points by one step."""
        advanced = np.empty_like(points)
        advanced[:, 0] = points[:, 0] + float(self.alpha)
        advanced[:, 1:] = points[:, 1:] + points[:, :-1]
        return mod1_batch(advanced)

    def contains(self, point: Any) -> bool:
        return isinstance(point, tuple) and len(point) == self.k and all(is_circle_point(value) for value in point)

    def project(self, point: Any) -> Any:
        return point[-1]

    def project_batch(self, points: np.ndarray) -> np.ndarray:
        """Last coordinates of an (M, k) array."""
        return points[:, -1]

    def approximate(self) -> 'SkewProductSystem':
        return SkewProductSystem(float(self.alpha), self.k)

    def coerce_point(self, point: Any, exact: bool) -> TorusPoint:
        convert = Fraction if exact else float
        return tuple(convert(value) for value in point)

    def describe(self) -> str:
        return f'skew product on T^{self.k} with alpha = {self.alpha}'


def skew_product_system(alpha: Number, k: int) -> SkewProductSystem:
    """The k-torus skew product driven by a rotation by alpha."""
    return SkewProductSystem(alpha if isinstance(alpha, float) else Fraction(alpha), k)


def _forward_difference_at_zero(values: list[Any], order: int) -> Any:
    """Order-m forward difference at 0 from the samples p(0), ..., p(m)."""
    return sum(((-1) ** (order - j) * math.comb(order, j) * values[j] for j in range(order + 1)), Fraction(0))


def polynomial_value(alpha: Number, coefficients: list[Number], n: int) -> Any:
    """Evaluate p(n) = alpha n^k + a_{k-1} n^{k-1} + ... + a_0 modulo one.

    Args:
        alpha: Leading coefficient
        coefficients: a_0, ..., a_{k-1} (lowest degree first)
        n: Integer argument
    """
    return reduce_mod1(_unreduced_value(alpha, coefficients, n))


def coeffs_to_point(alpha: Number, coefficients: list[Number]) -> TorusPoint:
    """Starting point (q_1(0), ..., q_k(0)) of the finite-difference chain of p.

    q_k = p and q_{i-1}(x) = q_i(x + 1) - q_i(x), so q_i(0) is the (k - i)-th
    forward difference of p at zero.

    Raises:
        DomainMismatchError: If no coefficients are given
    """
    k = len(coefficients)
    if k < 1:
        raise DomainMismatchError('Polynomial sequences need at least one coefficient (k >= 1)')
    samples = [_unreduced_value(alpha, coefficients, n) for n in range(k)]
    return tuple(reduce_mod1(_forward_difference_at_zero(samples, k - index)) for index in range(1, k + 1))


def _unreduced_value(alpha: Number, coefficients: list[Number], n: int) -> Any:
    k = len(coefficients)
    total: Any = alpha * n**k
    for degree, coefficient in enumerate(coefficients):
        total += coefficient * n**degree
    return total


def polynomial_orbit(alpha: Number, coefficients: list[Number]) -> tuple[SkewProductSystem, TorusPoint]:
    """System and start point whose last coordinate is p(n) mod 1.

    The chain of differences advances its first coordinate by k! * alpha, so
    that is the rotation number of the matching skew product.
    """
    k = len(coefficients)
    start = coeffs_to_point(alpha, coefficients)
    return skew_product_system(math.factorial(k) * alpha, k), start


def point_to_sequence(system: SkewProductSystem, start: TorusPoint, length: int) -> list[Any]:
    """Last coordinate of the first ``length`` iterates of ``start``.

    Raises:
        DomainMismatchError: If the point's dimension differs from the system's
    """
    if len(start) != system.k:
        raise DomainMismatchError(f'Point has {len(start)} coordinates but the system acts on T^{system.k}')
    return [system.project(point) for point in system.orbit(start, length)]


def torus_grid(resolution: int, k: int) -> list[TorusPoint]:
    """All points of the rational grid (i_1/q, ..., i_k/q), lexicographic order."""
    axis = [Fraction(index, resolution) for index in range(resolution)]
    return list(itertools.product(axis, repeat=k))


def torus_grid_array(resolution: int, k: int) -> np.ndarray:
    """Float version of ``torus_grid`` as an (q^k, k) array in the same order."""
    axes = np.meshgrid(*([np.arange(resolution) / resolution] * k), indexing='ij')
    return np.stack([axis.ravel() for axis in axes], axis=1)
