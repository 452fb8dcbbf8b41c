"""Subcommands over general systems: traces, windows and heavy-point searches."""

from typing import Any

import numpy as np

from heavysift.commands.result import CommandResult
from heavysift.commands.result import heaviness_dict
from heavysift.commands.result import psi_label
from heavysift.commands.result import trace_dict
from heavysift.commands.result import trace_rows
from heavysift.commands.specs import RunConfig
from heavysift.commands.specs import parse_observable
from heavysift.commands.specs import parse_point
from heavysift.commands.specs import parse_points
from heavysift.commands.specs import parse_system
from heavysift.core.observables import Observable
from heavysift.core.search import find_heavy_candidate
from heavysift.core.search import scan_candidates
from heavysift.core.search import two_sided_search
from heavysift.core.trace import deficit_trace
from heavysift.core.trace import heavy_window
from heavysift.core.trace import psi
from heavysift.core.trace import two_sided_trace
from heavysift.finite.heavy import window_set_exact
from heavysift.finite.system import FiniteSystem
from heavysift.systems.base import DynamicalSystem
from heavysift.systems.circle import circle_grid
from heavysift.systems.torus import torus_grid
from heavysift.systems.torus import torus_grid_array

TRACE_COLUMNS = ('n', 'deficit')
CANDIDATE_COLUMNS = ('index', 'point', 'min_deficit', 'psi', 'heavy')
TWO_SIDED_COLUMNS = ('found', 'point', 'first_time', 'second_time', 'min_time', 'window')
WINDOW_COLUMNS = ('point', 'n1', 'n2', 'heavy')


def _system_and_observable(config: RunConfig) -> tuple[DynamicalSystem, Observable]:
    system = parse_system(config.require('system'))
    return system, parse_observable(config.observable, system)


def _header(system: DynamicalSystem, f: Observable) -> dict[str, Any]:
    return {'system': system.describe(), 'observable': f.describe(), 'mean': f.mean}


def candidate_points(config: RunConfig, system: DynamicalSystem, f: Observable) -> list[Any] | np.ndarray:
    """Explicit --points, or the resolution-q grid of the system's domain.

    Rational data gets an exact Fraction grid; anything approximate gets a
    float array so the search can run vectorised.
    """
    if config.points is not None:
        return parse_points(config.points, system)

    resolution = config.grid if config.grid is not None else config.setting('search', 'grid')
    exact = system.exact and f.exact
    if system.domain == 'torus':
        dimension = system.k  # type: ignore[attr-defined]
        return torus_grid(resolution, dimension) if exact else torus_grid_array(resolution, dimension)
    if system.domain == 'circle':
        return circle_grid(resolution) if exact else np.arange(resolution) / resolution
    if isinstance(system, FiniteSystem):
        return list(system.atoms())
    return list(range(resolution))


def trace_command(config: RunConfig) -> CommandResult:
    """One-sided deficit trace d_0..d_N."""
    system, f = _system_and_observable(config)
    x = parse_point(config.require('point'), system)
    trace = deficit_trace(system, x, f, config.require('horizon'), config.resolved_tolerance())
    report = {**_header(system, f), 'x': x, **trace_dict(trace), 'heaviness': heaviness_dict(psi(trace))}
    return CommandResult(report, trace_rows(trace), TRACE_COLUMNS)


def trace2_command(config: RunConfig) -> CommandResult:
    """Two-sided deficit trace d_{n1}..d_{n2}."""
    system, f = _system_and_observable(config)
    x = parse_point(config.require('point'), system)
    trace = two_sided_trace(system, x, f, config.require('n1'), config.require('n2'), config.resolved_tolerance())
    report = {**_header(system, f), 'x': x, **trace_dict(trace)}
    return CommandResult(report, trace_rows(trace), TRACE_COLUMNS)


def window_command(config: RunConfig) -> CommandResult:
    """Membership in H(n1, n2) for one point, or the whole window set of a finite system."""
    system, f = _system_and_observable(config)
    n1, n2 = config.require('n1'), config.require('n2')

    if config.point is None and isinstance(system, FiniteSystem):
        members = window_set_exact(system, n1, n2)
        rows = [{'point': atom, 'n1': n1, 'n2': n2, 'heavy': atom in members} for atom in system.atoms()]
        report = {**_header(system, f), 'n1': n1, 'n2': n2, 'window_set': sorted(members), 'empty': not members}
        return CommandResult(report, rows, WINDOW_COLUMNS)

    x = parse_point(config.require('point'), system)
    heavy = heavy_window(system, x, f, n1, n2, config.resolved_tolerance())
    report = {**_header(system, f), 'x': x, 'n1': n1, 'n2': n2, 'heavy': heavy}
    return CommandResult(report, [{'point': x, 'n1': n1, 'n2': n2, 'heavy': heavy}], WINDOW_COLUMNS)


def heavy_scan_command(config: RunConfig) -> CommandResult:
    """Score every candidate point through N."""
    system, f = _system_and_observable(config)
    horizon = config.require('horizon')
    verdicts = scan_candidates(system, f, horizon, candidate_points(config, system, f), config.resolved_tolerance())
    rows = [
        {'index': v.index, 'point': v.point, 'min_deficit': v.min_deficit, 'psi': psi_label(v.psi), 'heavy': v.heavy}
        for v in verdicts
    ]
    heavy_count = sum(1 for v in verdicts if v.heavy)
    report = {
        **_header(system, f),
        'horizon': horizon,
        'candidates': len(verdicts),
        'heavy_count': heavy_count,
        'numerical': any(v.numerical for v in verdicts),
        'verdicts': rows,
    }
    return CommandResult(report, rows, CANDIDATE_COLUMNS)


def heavy_search_command(config: RunConfig) -> CommandResult:
    """Best candidate by lowest deficit."""
    system, f = _system_and_observable(config)
    horizon = config.require('horizon')
    candidates = candidate_points(config, system, f)
    result = find_heavy_candidate(system, f, horizon, candidates, config.resolved_tolerance())
    heaviness = heaviness_dict(result.report)
    report = {**_header(system, f), 'candidates': len(candidates), 'index': result.index, 'point': result.point, 'heaviness': heaviness}
    row = {
        'index': result.index,
        'point': result.point,
        'min_deficit': result.report.min_deficit,
        'psi': heaviness['psi'],
        'heavy': result.heavy,
    }
    return CommandResult(report, [row], CANDIDATE_COLUMNS)


def two_sided_search_command(config: RunConfig) -> CommandResult:
    """Orbit walk for a point heavy in both time directions."""
    system, f = _system_and_observable(config)
    x0 = parse_point(config.require('point'), system)
    horizon = config.require('horizon')
    max_steps = config.max_steps if config.max_steps is not None else config.setting('search', 'max_steps')
    found = two_sided_search(system, f, horizon, x0, max_steps, config.resolved_tolerance())

    row: dict[str, Any] = {'found': found is not None}
    if found is not None:
        row |= {
            'point': found.point,
            'first_time': found.first_time,
            'second_time': found.second_time,
            'min_time': found.min_time,
            'window': found.window,
        }
    report = {**_header(system, f), 'x0': x0, 'horizon': horizon, 'max_steps': max_steps, **row}
    return CommandResult(report, [row], TWO_SIDED_COLUMNS)
