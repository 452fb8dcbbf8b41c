"""Tests for textual system, observable and point specs."""

import math
from fractions import Fraction

import pytest

from heavysift.commands.specs import RunConfig
from heavysift.commands.specs import parse_intervals
from heavysift.commands.specs import parse_observable
from heavysift.commands.specs import parse_point
from heavysift.commands.specs import parse_points
from heavysift.commands.specs import parse_system
from heavysift.core.observables import CylinderObservable
from heavysift.core.observables import IndicatorObservable
from heavysift.core.observables import StepObservable
from heavysift.core.observables import TableObservable
from heavysift.errors import SpecParseError
from heavysift.finite.system import FiniteSystem
from heavysift.systems.circle import RotationSystem
from heavysift.systems.circle import TimesMSystem
from heavysift.systems.morse import MorseShiftSystem
from heavysift.systems.torus import SkewProductSystem


class TestParseSystem:
    """Test system specs."""

    def test_rotation(self):
        """Test an exact rotation."""
        system = parse_system('rotation:1/3')
        assert isinstance(system, RotationSystem)
        assert system.alpha == Fraction(1, 3)

    def test_times(self):
        """Test x -> m x."""
        system = parse_system('times:3')
        assert isinstance(system, TimesMSystem)
        assert system.m == 3

    def test_skew_with_irrational_alpha(self):
        """Test that the alpha part may itself contain parentheses."""
        system = parse_system('skew:sqrt(2):2')
        assert isinstance(system, SkewProductSystem)
        assert system.k == 2
        assert system.alpha == pytest.approx(math.sqrt(2) - 1)

    def test_morse(self):
        """Test the Morse shift."""
        assert isinstance(parse_system('Morse'), MorseShiftSystem)

    def test_cycles(self):
        """Test disjoint cycles of f-values."""
        system = parse_system('cycles:1,-1|0')
        assert isinstance(system, FiniteSystem)
        assert system.perm == (1, 0, 2)

    def test_finite_file(self, tmp_path, three_cycle):
        """Test loading a TOML record."""
        path = tmp_path / 'system.toml'
        three_cycle.dump(path)
        assert parse_system(f'finite:{path}') == three_cycle

    @pytest.mark.parametrize('spec', ['skew:2', 'times:x', 'circle:1/2', 'cycles:', 'cycles:~0.5,~-0.5', 'finite:'])
    def test_rejects_malformed(self, spec):
        """Test that malformed system specs raise SpecParseError."""
        with pytest.raises(SpecParseError):
            parse_system(spec)


class TestParseObservable:
    """Test observable specs."""

    def test_indicator_union(self):
        """Test a two-interval indicator."""
        f = parse_observable('indicator:1/2,3/4;0,1/4', parse_system('rotation:1/3'))
        assert isinstance(f, IndicatorObservable)
        assert f.target.intervals == ((0, Fraction(1, 4)), (Fraction(1, 2), Fraction(3, 4)))

    def test_step(self):
        """Test a step function with one breakpoint."""
        f = parse_observable('step:1/2:1,-1', parse_system('rotation:1/3'))
        assert isinstance(f, StepObservable)
        assert f.mean == 0

    def test_const(self):
        """Test a constant."""
        assert parse_observable('const:1/2', parse_system('rotation:1/3')).mean == Fraction(1, 2)

    def test_table_on_finite(self, swap_system):
        """Test a table observable using the system's weights."""
        f = parse_observable('table:2,-2', swap_system)
        assert isinstance(f, TableObservable)
        assert f.weights == swap_system.weights

    def test_cylinder_on_morse(self):
        """Test a Morse cylinder with an explicit frequency."""
        f = parse_observable('cylinder:11:1/6', parse_system('morse'))
        assert isinstance(f, CylinderObservable)
        assert f.frequency == Fraction(1, 6)

    def test_defaults(self, swap_system):
        """Test that finite and Morse systems supply their own observable."""
        assert parse_observable(None, swap_system) == swap_system.observable()
        assert parse_observable(None, parse_system('morse')).word == '1'

    def test_missing_observable_on_circle(self):
        """Test that circle systems need --obs."""
        with pytest.raises(SpecParseError):
            parse_observable(None, parse_system('rotation:1/3'))

    @pytest.mark.parametrize(
        ('spec', 'system_spec'),
        [('table:1,-1', 'rotation:1/3'), ('cylinder:11', 'rotation:1/3'), ('wave:1', 'rotation:1/3'), ('indicator:0', 'rotation:1/3')],
    )
    def test_rejects_malformed(self, spec, system_spec):
        """Test unknown kinds, wrong systems and bad intervals."""
        with pytest.raises(SpecParseError):
            parse_observable(spec, parse_system(system_spec))


def test_parse_intervals_requires_pairs():
    """Test that every interval has two endpoints."""
    with pytest.raises(SpecParseError):
        parse_intervals('0,1/2,1')


class TestParsePoint:
    """Test point specs."""

    def test_points_by_domain(self, swap_system):
        """Test atoms, circle points, torus points and Morse offsets."""
        assert parse_point('1', swap_system) == 1
        assert parse_point('1/3', parse_system('rotation:1/2')) == Fraction(1, 3)
        assert parse_point('0,1/2', parse_system('skew:1/3:2')) == (0, Fraction(1, 2))
        assert parse_point('5', parse_system('morse')) == 5

    def test_rejects_bad_points(self, swap_system):
        """Test that circle points have one coordinate and atoms are integers."""
        with pytest.raises(SpecParseError):
            parse_point('0,1', parse_system('rotation:1/2'))
        with pytest.raises(SpecParseError):
            parse_point('1/2', swap_system)

    def test_point_lists(self):
        """Test ';'-separated lists, ignoring empty items."""
        assert parse_points('0;1/2;', parse_system('rotation:1/3')) == [0, Fraction(1, 2)]


class TestRunConfig:
    """Test the per-invocation config."""

    def test_require(self):
        """Test that missing parameters name their flag."""
        config = RunConfig('two-sided-search')
        with pytest.raises(SpecParseError, match='--max-steps'):
            config.require('max_steps')
        assert RunConfig('trace', horizon=3).require('horizon') == 3

    def test_resolved_tolerance(self):
        """Test that --tolerance wins over the configured value."""
        assert RunConfig('trace').resolved_tolerance() == 1e-9
        assert RunConfig('trace', tolerance=1e-6).resolved_tolerance() == 1e-6
