"""Subcommands for the Morse sequence and polynomial sequences mod 1."""

from heavysift.commands.result import CommandResult
from heavysift.commands.specs import RunConfig
from heavysift.errors import SpecParseError
from heavysift.systems.morse import morse_prefix
from heavysift.systems.morse import scan_morse_heaviness
from heavysift.systems.torus import point_to_sequence
from heavysift.systems.torus import polynomial_orbit
from heavysift.systems.torus import polynomial_value
from heavysift.utils.numbers import is_exact
from heavysift.utils.numbers import parse_value
from heavysift.utils.numbers import parse_values

PREFIX_COLUMNS = ('index', 'bit')
MORSE_SCAN_COLUMNS = ('position', 'min_deficit', 'heavy', 'zero_returns')
POLY_COLUMNS = ('n', 'value', 'direct', 'agree')


def morse_command(config: RunConfig) -> CommandResult:
    """Morse prefix, or with --scan the heaviness of every shift starting with --word."""
    if not config.scan:
        length = config.length if config.length is not None else config.setting('morse', 'length')
        prefix = morse_prefix(length)
        rows = [{'index': index, 'bit': int(bit)} for index, bit in enumerate(prefix)]
        return CommandResult({'length': length, 'prefix': prefix}, rows, PREFIX_COLUMNS)

    word = config.word if config.word is not None else config.setting('morse', 'word')
    positions = config.positions if config.positions is not None else config.setting('morse', 'positions')
    horizon = config.horizon if config.horizon is not None else config.setting('morse', 'horizon')
    scanned = scan_morse_heaviness(word, positions, horizon)
    rows = [
        {'position': row.position, 'min_deficit': row.min_deficit, 'heavy': row.heavy, 'zero_returns': row.zero_returns}
        for row in scanned
    ]
    report = {
        'word': word,
        'positions': positions,
        'horizon': horizon,
        'matches': len(scanned),
        'all_heavy': all(row.heavy for row in scanned),
        'min_zero_returns': min((row.zero_returns for row in scanned), default=0),
        'rows': rows,
    }
    return CommandResult(report, rows, MORSE_SCAN_COLUMNS)


def _circle_distance(a: float, b: float) -> float:
    gap = abs(a - b) % 1.0
    return min(gap, 1.0 - gap)


def poly_seq_command(config: RunConfig) -> CommandResult:
    """p(n) mod 1 read off the skew product, next to direct evaluation."""
    alpha = parse_value(config.require('alpha'))
    coefficients = parse_values(config.require('coefficients'))
    if not coefficients:
        raise SpecParseError('poly-seq needs at least one coefficient (a_0, ..., a_{k-1})')
    length = config.require('horizon')

    system, start = polynomial_orbit(alpha, coefficients)
    sequence = point_to_sequence(system, start, length)
    exact = is_exact(alpha) and all(is_exact(a) for a in coefficients)
    tolerance = config.resolved_tolerance()

    rows = []
    for n, value in enumerate(sequence):
        direct = polynomial_value(alpha, coefficients, n)
        agree = value == direct if exact else _circle_distance(float(value), float(direct)) <= tolerance
        rows.append({'n': n, 'value': value, 'direct': direct, 'agree': agree})

    ok = all(row['agree'] for row in rows)
    report = {
        'alpha': alpha,
        'coefficients': coefficients,
        'system': system.describe(),
        'start': list(start),
        'exact': exact,
        'agree': ok,
        'sequence': rows,
    }
    return CommandResult(report, rows, POLY_COLUMNS, ok)
