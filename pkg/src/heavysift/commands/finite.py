"""Subcommands over exact finite systems."""

from typing import Any

from heavysift.commands.result import CommandResult
from heavysift.commands.result import psi_label
from heavysift.commands.specs import RunConfig
from heavysift.commands.specs import parse_system
from heavysift.errors import DomainMismatchError
from heavysift.finite.heavy import heavy_set_exact
from heavysift.finite.heavy import psi_exact
from heavysift.finite.heavy import psi_table
from heavysift.finite.sweeps import ergodic_dichotomy_sweep
from heavysift.finite.sweeps import positive_measure_sweep
from heavysift.finite.system import FiniteSystem
from heavysift.finite.tower import TowerPartition
from heavysift.finite.tower import greedy_tower_partition
from heavysift.finite.tower import certify_positive_measure

PSI_COLUMNS = ('atom', 'psi')
HEAVY_COLUMNS = ('atom', 'heavy')
TOWER_COLUMNS = ('row', 'height', 'base', 'row_atoms', 'row_sum')
SWEEP_COLUMNS = ('sweep', 'systems', 'checks', 'failed', 'passed')
CERTIFICATE_COLUMNS = ('horizon', 'holds', 'heavy_set', 'rows', 'reasons')


def _finite_system(config: RunConfig) -> FiniteSystem:
    system = parse_system(config.require('system'))
    if not isinstance(system, FiniteSystem):
        raise DomainMismatchError(f'{config.subcommand} needs a finite system (cycles:... or finite:...), got {system.describe()}')
    return system


def _system_dict(system: FiniteSystem) -> dict[str, Any]:
    return {**system.to_record(), 'cycles': [list(cycle) for cycle in system.cycles()], 'ergodic': system.is_ergodic()}


def finite_psi_command(config: RunConfig) -> CommandResult:
    """ψ of one atom, or of every atom."""
    system = _finite_system(config)
    horizon = config.require('horizon')
    if config.atom is not None:
        values = {config.atom: psi_exact(system, config.atom, horizon)}
    else:
        values = psi_table(system, horizon)
    rows = [{'atom': atom, 'psi': psi_label(value)} for atom, value in values.items()]
    return CommandResult({'system': _system_dict(system), 'horizon': horizon, 'psi': rows}, rows, PSI_COLUMNS)


def finite_heavy_command(config: RunConfig) -> CommandResult:
    """H(N) as an atom set with its measure."""
    system = _finite_system(config)
    horizon = config.require('horizon')
    members = heavy_set_exact(system, horizon)
    report = {
        'system': _system_dict(system),
        'horizon': horizon,
        'heavy_set': sorted(members),
        'measure': system.measure(members),
    }
    rows = [{'atom': atom, 'heavy': atom in members} for atom in system.atoms()]
    return CommandResult(report, rows, HEAVY_COLUMNS)


def _partition_dict(partition: TowerPartition) -> dict[str, Any]:
    return {
        'horizon': partition.horizon,
        'rows': [
            {
                'base': sorted(row.base),
                'height': row.height,
                'row_atoms': list(row.row_atoms),
                'row_sum': row.row_sum,
                'base_sums': [{'atom': atom, 'sum': value} for atom, value in row.base_sums],
            }
            for row in partition.rows
        ],
        'collisions': [{'row': c.row, 'atom': c.atom, 'kind': c.kind} for c in partition.collisions],
        'covered': sorted(partition.covered),
        'heavy': sorted(partition.heavy),
        'pairwise_disjoint': partition.pairwise_disjoint,
        'covers_all': partition.covers_all,
    }


def tower_command(config: RunConfig) -> CommandResult:
    """Peeled rows through N."""
    system = _finite_system(config)
    partition = greedy_tower_partition(system, config.require('horizon'))
    rows = [
        {'row': index, 'height': row.height, 'base': sorted(row.base), 'row_atoms': list(row.row_atoms), 'row_sum': row.row_sum}
        for index, row in enumerate(partition.rows)
    ]
    return CommandResult({'system': _system_dict(system), **_partition_dict(partition)}, rows, TOWER_COLUMNS)


def finite_verify_command(config: RunConfig) -> CommandResult:
    """Positive-measure certificates for one system, or a seeded sweep.

    With --system every N in 1..horizon is certified for that system. Otherwise
    --count random systems are drawn from --seed; --dichotomy runs the
    ergodicity sweep instead.
    """
    horizon = config.horizon if config.horizon is not None else config.setting('finite', 'horizon')

    if config.system is not None:
        system = _finite_system(config)
        table = psi_table(system, horizon)
        certificates = [certify_positive_measure(system, n, table) for n in range(1, horizon + 1)]
        rows = [
            {
                'horizon': c.horizon,
                'holds': c.holds,
                'heavy_set': sorted(c.heavy_set),
                'rows': len(c.partition.rows),
                'reasons': c.failures(),
            }
            for c in certificates
        ]
        ok = all(c.holds for c in certificates)
        return CommandResult({'system': _system_dict(system), 'passed': ok, 'certificates': rows}, rows, CERTIFICATE_COLUMNS, ok)

    seed = config.seed if config.seed is not None else config.setting('finite', 'seed')
    atoms = config.atoms if config.atoms is not None else config.setting('finite', 'atoms')
    count = config.count if config.count is not None else config.setting('finite', 'count')
    if config.dichotomy:
        summary = ergodic_dichotomy_sweep(seed, atoms, count, horizon)
    else:
        summary = positive_measure_sweep(seed, atoms, count, horizon, config.setting('finite', 'f_min'), config.setting('finite', 'f_max'))
    report = {'seed': seed, 'atoms': atoms, 'count': count, 'horizon': horizon, **summary.to_dict()}
    row = {key: report[key] for key in SWEEP_COLUMNS}
    return CommandResult(report, [row], SWEEP_COLUMNS, summary.passed)
