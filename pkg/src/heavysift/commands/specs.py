"""Textual system, observable and point specs, and the RunConfig they live in.

Systems:      rotation:<alpha> | times:<m> | skew:<alpha>:<k> | morse
              | cycles:<f,...>|<f,...> | finite:<path.toml>
Observables:  indicator:<a,b>[;<a,b>...] | step:<breaks>:<values> | const:<c>
              | table:<values> | cylinder:<word>[:<mean>]
Points:       comma-separated coordinates (one for circles, k for the k-torus,
              an atom index for finite systems, an offset for the Morse shift);
              lists of points are separated by ';'.
"""

from dataclasses import dataclass
from dataclasses import field
from fractions import Fraction
from pathlib import Path
from typing import Any

from heavysift.config.defaults import DEFAULT_CONFIG
from heavysift.core.observables import IndicatorObservable
from heavysift.core.observables import Observable
from heavysift.core.observables import StepObservable
from heavysift.core.observables import TableObservable
from heavysift.core.observables import constant_observable
from heavysift.errors import SpecParseError
from heavysift.finite.system import FiniteSystem
from heavysift.systems.base import DynamicalSystem
from heavysift.systems.circle import IntervalUnion
from heavysift.systems.circle import rotation_system
from heavysift.systems.circle import times_m_system
from heavysift.systems.morse import MorseShiftSystem
from heavysift.systems.morse import morse_shift_system
from heavysift.systems.torus import skew_product_system
from heavysift.utils.numbers import parse_value
from heavysift.utils.numbers import parse_values


@dataclass
class RunConfig:
    """Everything one subcommand invocation needs.

    Numeric parameters are kept as the strings the user typed and parsed only
    when the subcommand runs, so exact inputs never pass through a float.
    """

    subcommand: str
    system: str | None = None
    observable: str | None = None
    point: str | None = None
    points: str | None = None
    grid: int | None = None
    horizon: int | None = None
    n1: int | None = None
    n2: int | None = None
    max_steps: int | None = None
    atom: int | None = None
    seed: int | None = None
    atoms: int | None = None
    count: int | None = None
    k: int | None = None
    q_max: int | None = None
    target: str | None = None
    alpha: str | None = None
    coefficients: str | None = None
    length: int | None = None
    word: str | None = None
    positions: int | None = None
    scan: bool = False
    dichotomy: bool = False
    output_format: str | None = None
    output: Path | None = None
    tolerance: float | None = None
    settings: dict[str, Any] = field(default_factory=lambda: DEFAULT_CONFIG)

    def setting(self, section: str, key: str) -> Any:
        """Value from the loaded configuration."""
        return self.settings[section][key]

    def resolved_tolerance(self) -> float:
        """--tolerance, else the configured (or HEAVYSIFT_TOLERANCE) default."""
        return self.tolerance if self.tolerance is not None else float(self.setting('numeric', 'tolerance'))

    def require(self, name: str) -> Any:
        """Return a parameter that the subcommand cannot run without.

        Raises:
            SpecParseError: If the parameter was not given
        """
        value = getattr(self, name)
        if value is None:
            flag = name.replace('_', '-')
            raise SpecParseError(f'{self.subcommand} requires --{flag}')
        return value


def _split_kind(spec: str) -> tuple[str, str]:
    kind, _, rest = spec.strip().partition(':')
    return kind.strip().lower(), rest.strip()


def _parse_int(text: str, what: str) -> int:
    try:
        return int(text)
    except ValueError as e:
        raise SpecParseError(f'{what} must be an integer, got {text!r}') from e


def parse_system(spec: str) -> DynamicalSystem:
    """Build a system from its textual spec.

    Raises:
        SpecParseError: If the spec is malformed or names an unknown kind
    """
    kind, rest = _split_kind(spec)
    match kind:
        case 'rotation':
            return rotation_system(parse_value(rest))
        case 'times':
            return times_m_system(_parse_int(rest, 'm'))
        case 'skew':
            alpha_text, _, k_text = rest.rpartition(':')
            if not alpha_text:
                raise SpecParseError(f'Skew products are written skew:<alpha>:<k>, got {spec!r}')
            return skew_product_system(parse_value(alpha_text), _parse_int(k_text, 'k'))
        case 'morse':
            return morse_shift_system()
        case 'cycles':
            if not rest:
                raise SpecParseError('cycles: needs at least one cycle of f-values')
            return FiniteSystem.from_cycles([_exact_values(part) for part in rest.split('|')])
        case 'finite':
            if not rest:
                raise SpecParseError('finite: needs the path of a TOML record')
            return FiniteSystem.load(Path(rest))
    raise SpecParseError(f'Unknown system kind {kind!r} in {spec!r}')


def _exact_values(text: str) -> list[Fraction]:
    values = parse_values(text)
    if any(not isinstance(value, Fraction) for value in values):
        raise SpecParseError(f'Finite systems need exact f-values, got {text!r}')
    return values  # type: ignore[return-value]


def parse_intervals(text: str) -> IntervalUnion:
    """Parse 'a,b;c,d' into an IntervalUnion."""
    pairs = []
    for part in text.split(';'):
        bounds = parse_values(part)
        if len(bounds) != 2:
            raise SpecParseError(f'Intervals are written a,b; got {part!r}')
        pairs.append((bounds[0], bounds[1]))
    return IntervalUnion.from_pairs(pairs)


def parse_observable(spec: str | None, system: DynamicalSystem) -> Observable:
    """Build an observable; finite and Morse systems supply their own when ``spec`` is None.

    Raises:
        SpecParseError: If the spec is malformed, unknown, or missing for a system without a default
    """
    if spec is None:
        if isinstance(system, FiniteSystem):
            return system.observable()
        if isinstance(system, MorseShiftSystem):
            return system.observable()
        raise SpecParseError(f'{system.describe()} needs an observable (--obs)')

    kind, rest = _split_kind(spec)
    match kind:
        case 'indicator':
            return IndicatorObservable(parse_intervals(rest))
        case 'step':
            breaks_text, _, values_text = rest.partition(':')
            return StepObservable(tuple(parse_values(breaks_text)), tuple(parse_values(values_text)))
        case 'const':
            return constant_observable(parse_value(rest))
        case 'table':
            if not isinstance(system, FiniteSystem):
                raise SpecParseError('table observables need a finite system')
            return TableObservable(tuple(parse_values(rest)), system.weights)
        case 'cylinder':
            word, _, mean_text = rest.partition(':')
            if not isinstance(system, MorseShiftSystem):
                raise SpecParseError('cylinder observables need the Morse shift')
            return system.observable(word, parse_value(mean_text) if mean_text else Fraction(1, 2))
    raise SpecParseError(f'Unknown observable kind {kind!r} in {spec!r}')


def parse_point(text: str, system: DynamicalSystem) -> Any:
    """Parse one point in the representation ``system`` uses."""
    if system.domain in ('finite', 'symbolic'):
        return _parse_int(text.strip(), 'Point')
    values = parse_values(text)
    if system.domain == 'torus':
        return tuple(values)
    if len(values) != 1:
        raise SpecParseError(f'Circle points have one coordinate, got {text!r}')
    return values[0]


def parse_points(text: str, system: DynamicalSystem) -> list[Any]:
    """Parse a ';'-separated list of points."""
    return [parse_point(part, system) for part in text.split(';') if part.strip()]
