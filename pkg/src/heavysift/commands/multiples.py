"""Subcommands for the multiples sequence and continued fractions."""

from fractions import Fraction

from heavysift.commands.result import CommandResult
from heavysift.commands.result import heaviness_dict
from heavysift.commands.result import trace_dict
from heavysift.commands.result import trace_rows
from heavysift.commands.specs import RunConfig
from heavysift.commands.specs import parse_intervals
from heavysift.core.trace import psi
from heavysift.errors import DomainMismatchError
from heavysift.multiples.continued_fraction import cf_expand_normalized
from heavysift.multiples.continued_fraction import odd_index_divisible
from heavysift.multiples.sequence import heavy_multiples_exact
from heavysift.multiples.sequence import heavy_multiples_scan
from heavysift.multiples.sequence import multiples_deficits
from heavysift.multiples.sweep import SWEEP_COLUMNS
from heavysift.multiples.sweep import characterization_sweep
from heavysift.utils.numbers import parse_value
from heavysift.utils.numbers import reduce_mod1

DECISION_COLUMNS = ('x', 'heavy', 'first_failure', 'delta', 'period')
CF_COLUMNS = ('x', 'a0', 'quotients', 'k', 'divisible')
SCAN_COLUMNS = ('x',)
TRACE_COLUMNS = ('n', 'deficit')


def _exact_x(config: RunConfig) -> Fraction:
    x = parse_value(config.require('point'))
    if not isinstance(x, Fraction):
        raise DomainMismatchError(f'{config.subcommand} needs an exact rational x, got {x!r}')
    return x


def multiples_command(config: RunConfig) -> CommandResult:
    """Finite-horizon deficits of x, 2x, ..., Nx; x is read mod 1."""
    x = reduce_mod1(parse_value(config.require('point')))
    target = parse_intervals(config.require('target'))
    trace = multiples_deficits(x, target, config.require('horizon'), config.resolved_tolerance())
    report = {'x': x, 'target': target.describe(), **trace_dict(trace), 'heaviness': heaviness_dict(psi(trace))}
    return CommandResult(report, trace_rows(trace), TRACE_COLUMNS)


def multiples_exact_command(config: RunConfig) -> CommandResult:
    """All-N decision for rational x."""
    x = _exact_x(config)
    target = parse_intervals(config.require('target'))
    decision = heavy_multiples_exact(x, target)
    row = {
        'x': decision.x,
        'heavy': decision.heavy,
        'first_failure': decision.first_failure,
        'delta': decision.period_surplus,
        'period': decision.period,
    }
    report = {**row, 'target': target.describe(), 'period_deficits': list(decision.period_deficits)}
    return CommandResult(report, [row], DECISION_COLUMNS)


def cf_command(config: RunConfig) -> CommandResult:
    """Even-length continued fraction, with the odd-index test when --k is given."""
    x = _exact_x(config)
    cf = cf_expand_normalized(x)
    divisible = odd_index_divisible(cf, config.k) if config.k is not None else None
    row = {'x': x, 'a0': cf.a0, 'quotients': list(cf.quotients), 'k': config.k, 'divisible': divisible}
    report = {**row, 'length': len(cf.quotients), 'value': cf.value(), 'convergents': cf.convergents()}
    return CommandResult(report, [row], CF_COLUMNS)


def cf_sweep_command(config: RunConfig) -> CommandResult:
    """Characterization sweep over reduced p/q with q <= q_max."""
    k = config.k if config.k is not None else config.setting('multiples', 'k')
    q_max = config.q_max if config.q_max is not None else config.setting('multiples', 'q_max')
    sweep = characterization_sweep(k, q_max)
    rows = [row.to_dict() for row in sweep.rows]
    report = {
        'k': k,
        'q_max': q_max,
        'total': sweep.total,
        'agreements': sweep.agreements,
        'passed': sweep.passed,
        'mismatches': [{**row.to_dict(), 'quotients': list(row.quotients)} for row in sweep.mismatches],
        'rows': rows,
    }
    return CommandResult(report, rows, SWEEP_COLUMNS, sweep.passed, default_format='csv')


def multiples_scan_command(config: RunConfig) -> CommandResult:
    """Grid points i/q whose multiples sequence is heavy (exact all-N without --N)."""
    target = parse_intervals(config.require('target'))
    resolution = config.grid if config.grid is not None else config.setting('search', 'grid')
    scan = heavy_multiples_scan(target, resolution, config.horizon, config.resolved_tolerance())
    report = {
        'target': target.describe(),
        'resolution': scan.resolution,
        'horizon': scan.horizon if scan.horizon is not None else 'all',
        'survivors': list(scan.survivors),
        'survivor_fraction': scan.survivor_fraction,
        'numerical': scan.numerical,
    }
    return CommandResult(report, [{'x': x} for x in scan.survivors], SCAN_COLUMNS)
