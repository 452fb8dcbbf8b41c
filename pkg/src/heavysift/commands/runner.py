"""Dispatch a RunConfig to its subcommand and emit the report.

Exit statuses: 0 on success, 1 when a certificate or cross-check failed,
2 when the input violated a precondition.
"""

import logging
import sys
from collections.abc import Callable

from rich.console import Console

from heavysift.commands.finite import finite_heavy_command
from heavysift.commands.finite import finite_psi_command
from heavysift.commands.finite import finite_verify_command
from heavysift.commands.finite import tower_command
from heavysift.commands.heaviness import heavy_scan_command
from heavysift.commands.heaviness import heavy_search_command
from heavysift.commands.heaviness import trace2_command
from heavysift.commands.heaviness import trace_command
from heavysift.commands.heaviness import two_sided_search_command
from heavysift.commands.heaviness import window_command
from heavysift.commands.multiples import cf_command
from heavysift.commands.multiples import cf_sweep_command
from heavysift.commands.multiples import multiples_command
from heavysift.commands.multiples import multiples_exact_command
from heavysift.commands.multiples import multiples_scan_command
from heavysift.commands.result import CommandResult
from heavysift.commands.sequences import morse_command
from heavysift.commands.sequences import poly_seq_command
from heavysift.commands.specs import RunConfig
from heavysift.config.defaults import OUTPUT_FORMATS
from heavysift.errors import HeavinessError
from heavysift.errors import SpecParseError
from heavysift.output.csv_formatter import format_csv
from heavysift.output.json_formatter import format_json
from heavysift.output.toon_formatter import format_toon

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED_CHECK = 1
EXIT_USAGE = 2

HANDLERS: dict[str, Callable[[RunConfig], CommandResult]] = {
    'trace': trace_command,
    'trace2': trace2_command,
    'heavy-scan': heavy_scan_command,
    'heavy-search': heavy_search_command,
    'two-sided-search': two_sided_search_command,
    'finite-psi': finite_psi_command,
    'finite-heavy': finite_heavy_command,
    'tower': tower_command,
    'finite-verify': finite_verify_command,
    'window': window_command,
    'multiples': multiples_command,
    'multiples-exact': multiples_exact_command,
    'cf': cf_command,
    'cf-sweep': cf_sweep_command,
    'multiples-scan': multiples_scan_command,
    'morse': morse_command,
    'poly-seq': poly_seq_command,
}


def resolve_format(config: RunConfig, result: CommandResult) -> str:
    """--format, else the configured default, else the subcommand's own default.

    Raises:
        SpecParseError: If the chosen format is unknown
    """
    chosen = config.output_format or config.setting('output', 'default_format') or result.default_format
    if chosen not in OUTPUT_FORMATS:
        raise SpecParseError(f'Unknown output format {chosen!r}; choose one of {", ".join(OUTPUT_FORMATS)}')
    return chosen


def render(result: CommandResult, output_format: str) -> str:
    """Format a result; every format ends with exactly one newline."""
    if output_format == 'csv':
        text = format_csv(result.rows, result.columns)
    elif output_format == 'toon':
        text = format_toon(result.report)
    else:
        text = format_json(result.report)
    return text if text.endswith('\n') else f'{text}\n'


def run(config: RunConfig) -> int:
    """Run one subcommand and write its report to stdout or --output.

    Args:
        config: Parsed invocation

    Returns:
        Exit status (0 ok, 1 failed check, 2 precondition violation)
    """
    console = Console(stderr=True, no_color=not config.setting('output', 'use_colors'))
    handler = HANDLERS.get(config.subcommand)
    if handler is None:
        console.print(f'[red]Error: Unknown subcommand "{config.subcommand}"[/red]')
        console.print(f'[dim]Available: {", ".join(HANDLERS)}[/dim]')
        return EXIT_USAGE

    try:
        result = handler(config)
        text = render(result, resolve_format(config, result))
    except HeavinessError as e:
        console.print(f'[red]Error: {e}[/red]')
        return EXIT_USAGE

    if config.output is not None:
        try:
            config.output.write_text(text, encoding='utf-8')
        except OSError as e:
            console.print(f'[red]Error writing {config.output}: {e}[/red]')
            return EXIT_USAGE
        logger.info('Wrote %s report to %s', config.subcommand, config.output)
    else:
        sys.stdout.write(text)

    if not result.ok:
        console.print(f'[yellow]{config.subcommand}: a check failed; see the report for details[/yellow]')
        return EXIT_FAILED_CHECK
    return EXIT_OK
