"""Main CLI application using Typer.

This module defines the heavysift command-line interface: one subcommand per
heaviness operation, each building a RunConfig for the shared runner.
"""

from pathlib import Path
from typing import Annotated

import click
import typer
from rich.console import Console
from typer.core import TyperGroup

from heavysift import __version__
from heavysift.cli_formatter import format_help_with_colors
from heavysift.commands.specs import RunConfig


class ColoredTyperGroup(TyperGroup):
    """Custom TyperGroup that uses our uv-style colored formatter."""

    def format_help(self, ctx: click.Context, formatter: click.HelpFormatter) -> None:
        """Override help formatting to use our custom colored formatter."""
        help_text = format_help_with_colors(ctx)
        # click.echo keeps the ANSI codes intact
        click.echo(help_text, color=True)


app = typer.Typer(
    name='heavysift',
    help='Compute and certify heavy points of measure-preserving systems.',
    add_completion=False,
    rich_markup_mode=None,
    pretty_exceptions_enable=False,
    epilog='Use `heavysift help <command>` for more details on a specific command.',
    cls=ColoredTyperGroup,
)
console = Console(stderr=True)


SystemOpt = Annotated[
    str | None,
    typer.Option(
        '--system',
        '-s',
        help='System spec: rotation:<alpha>, times:<m>, skew:<alpha>:<k>, morse, cycles:<f,..>|<f,..>, finite:<path>',
    ),
]
ObservableOpt = Annotated[
    str | None,
    typer.Option(
        '--obs',
        help='Observable spec: indicator:<a,b>, step:<breaks>:<values>, const:<c>, table:<values>, cylinder:<word>:<mean>',
    ),
]
PointOpt = Annotated[str | None, typer.Option('--x', '--point', help='Point: a coordinate, a k-tuple, an atom or a shift offset')]
HorizonOpt = Annotated[int | None, typer.Option('--N', '--horizon', help='Horizon N')]
N1Opt = Annotated[int | None, typer.Option('--n1', help='Window start (n1 <= 0 for two-sided traces)')]
N2Opt = Annotated[int | None, typer.Option('--n2', help='Window end')]
PointsOpt = Annotated[str | None, typer.Option('--points', help='Explicit candidate points separated by ";"')]
GridOpt = Annotated[int | None, typer.Option('--grid', help='Candidate grid resolution q (default from config)')]
SeedOpt = Annotated[int | None, typer.Option('--seed', help='Seed for random systems')]
AtomsOpt = Annotated[int | None, typer.Option('--atoms', help='Largest number of atoms per random system')]
CountOpt = Annotated[int | None, typer.Option('--count', help='Number of random systems (choices per size for --dichotomy)')]
KOpt = Annotated[int | None, typer.Option('--k', help='Divisor k of the odd-index test')]
TargetOpt = Annotated[str | None, typer.Option('--target', help='Target set a,b[;a,b...] on the circle')]
FormatOpt = Annotated[str | None, typer.Option('--format', '-f', help='Output format: json, csv or toon', envvar='HEAVYSIFT_OUTPUT_FORMAT')]
OutputOpt = Annotated[Path | None, typer.Option('--output', '-o', help='Write the report to a file instead of stdout')]
ToleranceOpt = Annotated[float | None, typer.Option('--tolerance', help='Tolerance for approximate runs (default 1e-9)')]


def version_callback(value: bool) -> None:
    """Display version information."""
    if value:
        Console().print(f'heavysift version {__version__}')
        raise typer.Exit()


@app.callback(invoke_without_command=True)
def main(
    ctx: typer.Context,
    version: bool = typer.Option(
        None,
        '--version',
        '-V',
        callback=version_callback,
        is_eager=True,
        help='Display the heavysift version',
    ),
    config_file: str | None = typer.Option(
        None,
        '--config-file',
        help='Path to a heavysift config.toml',
        envvar='HEAVYSIFT_CONFIG_FILE',
    ),
    no_config: bool = typer.Option(
        False,
        '--no-config',
        help='Avoid loading configuration files',
        envvar='HEAVYSIFT_NO_CONFIG',
    ),
    verbose: bool = typer.Option(
        False,
        '--verbose',
        '-v',
        help='Log sweep and search progress to stderr',
    ),
) -> None:
    """heavysift - heaviness of Birkhoff sums in measure-preserving systems.

    Computes deficit traces, finds and certifies heavy points, peels tower
    partitions of finite systems, and decides heaviness of the multiples
    sequence through continued fractions. Exact rational input stays exact.
    """
    ctx.obj = {
        'config_file': config_file,
        'no_config': no_config,
        'verbose': verbose,
    }

    if ctx.invoked_subcommand is None:
        click.echo(format_help_with_colors(ctx), color=True)
        raise typer.Exit()


def _dispatch(ctx: typer.Context, config: RunConfig) -> None:
    """Load settings, run the subcommand and exit with its status."""
    from heavysift.commands.runner import run
    from heavysift.config.loader import load_config
    from heavysift.config.validator import validate_config
    from heavysift.utils.logging import configure_logging

    options = ctx.obj or {}
    configure_logging(options.get('verbose', False))

    config_file = options.get('config_file')
    settings = load_config(Path(config_file) if config_file else None, use_file=not options.get('no_config', False))
    is_valid, errors = validate_config(settings)
    if not is_valid:
        for error in errors:
            console.print(f'[red]Error: {error}[/red]')
        raise typer.Exit(2)

    config.settings = settings
    raise typer.Exit(run(config))


@app.command()
def trace(
    ctx: typer.Context,
    system: SystemOpt = None,
    obs: ObservableOpt = None,
    x: PointOpt = None,
    horizon: HorizonOpt = None,
    format: FormatOpt = None,
    output: OutputOpt = None,
    tolerance: ToleranceOpt = None,
) -> None:
    """Deficit trace d_0..d_N of one orbit

    d_n = S_n(x) - n * mean(f), where S_n sums f over x, Tx, ..., T^(n-1)x.
    The report also carries psi, the first time the deficit goes negative.

    Examples:
        heavysift trace --system rotation:1/3 --obs indicator:0,1/3 --x 0 --N 3
        heavysift trace --system 'skew:sqrt(2):2' --obs indicator:0,1/4 --x 0,0 --N 100
        heavysift trace --system cycles:2,-1,-1 --x 0 --N 6 --format csv
    """
    config = RunConfig('trace', system=system, observable=obs, point=x, horizon=horizon)
    _dispatch(ctx, _with_output(config, format, output, tolerance))


@app.command()
def trace2(
    ctx: typer.Context,
    system: SystemOpt = None,
    obs: ObservableOpt = None,
    x: PointOpt = None,
    n1: N1Opt = None,
    n2: N2Opt = None,
    format: FormatOpt = None,
    output: OutputOpt = None,
    tolerance: ToleranceOpt = None,
) -> None:
    """Two-sided deficit trace d_n1..d_n2 of an invertible system

    Examples:
        heavysift trace2 --system cycles:2,-1,-1 --x 0 --n1 -3 --n2 3
        heavysift trace2 --system rotation:2/5 --obs indicator:0,1/2 --x 0 --n1 -5 --n2 5
    """
    config = RunConfig('trace2', system=system, observable=obs, point=x, n1=n1, n2=n2)
    _dispatch(ctx, _with_output(config, format, output, tolerance))


@app.command('heavy-scan')
def heavy_scan(
    ctx: typer.Context,
    system: SystemOpt = None,
    obs: ObservableOpt = None,
    horizon: HorizonOpt = None,
    points: PointsOpt = None,
    grid: GridOpt = None,
    format: FormatOpt = None,
    output: OutputOpt = None,
    tolerance: ToleranceOpt = None,
) -> None:
    """Heaviness verdict through N for every candidate point

    Candidates are --points, or the grid i/q of the system's domain (every
    atom for finite systems).

    Examples:
        heavysift heavy-scan --system rotation:1/3 --obs indicator:0,1/3 --N 9 --grid 6
        heavysift heavy-scan --system cycles:1,-1|0 --N 4 --format csv
    """
    config = RunConfig('heavy-scan', system=system, observable=obs, horizon=horizon, points=points, grid=grid)
    _dispatch(ctx, _with_output(config, format, output, tolerance))


@app.command('heavy-search')
def heavy_search(
    ctx: typer.Context,
    system: SystemOpt = None,
    obs: ObservableOpt = None,
    horizon: HorizonOpt = None,
    points: PointsOpt = None,
    grid: GridOpt = None,
    format: FormatOpt = None,
    output: OutputOpt = None,
    tolerance: ToleranceOpt = None,
) -> None:
    """Candidate with the largest minimum deficit through N

    Approximate grids on circles and tori are scored in one vectorised pass;
    the winner is then re-checked orbit by orbit.

    Examples:
        heavysift heavy-search --system 'skew:sqrt(2):2' --obs indicator:0,1/4 --N 2000 --grid 512
        heavysift heavy-search --system rotation:1/3 --obs indicator:0,1/3 --N 30
    """
    config = RunConfig('heavy-search', system=system, observable=obs, horizon=horizon, points=points, grid=grid)
    _dispatch(ctx, _with_output(config, format, output, tolerance))


@app.command('two-sided-search')
def two_sided_search(
    ctx: typer.Context,
    system: SystemOpt = None,
    obs: ObservableOpt = None,
    x: PointOpt = None,
    horizon: HorizonOpt = None,
    max_steps: Annotated[int | None, typer.Option('--max-steps', help='Orbit steps to walk before giving up')] = None,
    format: FormatOpt = None,
    output: OutputOpt = None,
    tolerance: ToleranceOpt = None,
) -> None:
    """Walk an orbit for a point heavy in both time directions

    Finds i with T^i x0 in H(-N, 0) and a later j with T^j x0 in H(0, N),
    then returns the orbit point at the lowest deficit between them.

    Examples:
        heavysift two-sided-search --system cycles:1,-1 --x 0 --N 4
        heavysift two-sided-search --system 'rotation:sqrt(2)' --obs indicator:0,1/2 --x 0 --N 50
    """
    config = RunConfig('two-sided-search', system=system, observable=obs, point=x, horizon=horizon, max_steps=max_steps)
    _dispatch(ctx, _with_output(config, format, output, tolerance))


@app.command('finite-psi')
def finite_psi(
    ctx: typer.Context,
    system: SystemOpt = None,
    horizon: HorizonOpt = None,
    atom: Annotated[int | None, typer.Option('--atom', help='Single atom (default: every atom)')] = None,
    format: FormatOpt = None,
    output: OutputOpt = None,
) -> None:
    """Exact psi (first failure time) for the atoms of a finite system

    Examples:
        heavysift finite-psi --system cycles:2,-1,-1 --N 6
        heavysift finite-psi --system finite:system.toml --atom 3 --N 20
    """
    config = RunConfig('finite-psi', system=system, horizon=horizon, atom=atom)
    _dispatch(ctx, _with_output(config, format, output, None))


@app.command('finite-heavy')
def finite_heavy(
    ctx: typer.Context,
    system: SystemOpt = None,
    horizon: HorizonOpt = None,
    format: FormatOpt = None,
    output: OutputOpt = None,
) -> None:
    """Heavy set H(N) of a finite system and its measure

    Examples:
        heavysift finite-heavy --system cycles:1,-1 --N 5
    """
    _dispatch(ctx, _with_output(RunConfig('finite-heavy', system=system, horizon=horizon), format, output, None))


@app.command()
def tower(
    ctx: typer.Context,
    system: SystemOpt = None,
    horizon: HorizonOpt = None,
    format: FormatOpt = None,
    output: OutputOpt = None,
) -> None:
    """Greedy tower partition of a finite system through N

    Rows are peeled from the longest failure times down; each row's base
    sum is negative, which is what certifies that H(N) has positive measure.

    Examples:
        heavysift tower --system cycles:1,-1 --N 2
        heavysift tower --system cycles:2,-1,-1 --N 3 --format csv
    """
    _dispatch(ctx, _with_output(RunConfig('tower', system=system, horizon=horizon), format, output, None))


@app.command('finite-verify')
def finite_verify(
    ctx: typer.Context,
    system: SystemOpt = None,
    horizon: HorizonOpt = None,
    seed: SeedOpt = None,
    atoms: AtomsOpt = None,
    count: CountOpt = None,
    dichotomy: Annotated[bool, typer.Option('--dichotomy', help='Run the ergodic/non-ergodic window sweep instead')] = False,
    format: FormatOpt = None,
    output: OutputOpt = None,
) -> None:
    """Certify positive-measure heavy sets, for one system or a seeded sweep

    Exits 1 when any certificate fails.

    Examples:
        heavysift finite-verify --seed 7 --atoms 8 --count 500 --N 20
        heavysift finite-verify --system cycles:3,-1,-2 --N 10
        heavysift finite-verify --dichotomy --seed 1 --atoms 6 --count 50 --N 5
    """
    config = RunConfig('finite-verify', system=system, horizon=horizon, seed=seed, atoms=atoms, count=count, dichotomy=dichotomy)
    _dispatch(ctx, _with_output(config, format, output, None))


@app.command()
def window(
    ctx: typer.Context,
    system: SystemOpt = None,
    obs: ObservableOpt = None,
    x: PointOpt = None,
    n1: N1Opt = None,
    n2: N2Opt = None,
    format: FormatOpt = None,
    output: OutputOpt = None,
    tolerance: ToleranceOpt = None,
) -> None:
    """Membership in the window set H(n1, n2)

    Without --x on a finite system, reports the whole window set.

    Examples:
        heavysift window --system cycles:1,-1 --x 0 --n1 -2 --n2 2
        heavysift window --system cycles:1|-1 --n1 -1 --n2 1
    """
    config = RunConfig('window', system=system, observable=obs, point=x, n1=n1, n2=n2)
    _dispatch(ctx, _with_output(config, format, output, tolerance))


@app.command()
def multiples(
    ctx: typer.Context,
    x: PointOpt = None,
    target: TargetOpt = None,
    horizon: HorizonOpt = None,
    format: FormatOpt = None,
    output: OutputOpt = None,
    tolerance: ToleranceOpt = None,
) -> None:
    """Deficits of the multiples sequence x, 2x, ..., Nx mod 1

    Examples:
        heavysift multiples --x 2/5 --target 0,1/2 --N 5
        heavysift multiples --x 'sqrt(2)' --target 0,1/2 --N 1000 --format csv
    """
    config = RunConfig('multiples', point=x, target=target, horizon=horizon)
    _dispatch(ctx, _with_output(config, format, output, tolerance))


@app.command('multiples-exact')
def multiples_exact(
    ctx: typer.Context,
    x: PointOpt = None,
    target: TargetOpt = None,
    format: FormatOpt = None,
    output: OutputOpt = None,
) -> None:
    """Decide heaviness for every N at once, for rational x

    Examples:
        heavysift multiples-exact --x 2/5 --target 0,1/2
        heavysift multiples-exact --x 1/2 --target 0,1/2
    """
    _dispatch(ctx, _with_output(RunConfig('multiples-exact', point=x, target=target), format, output, None))


@app.command()
def cf(
    ctx: typer.Context,
    x: PointOpt = None,
    k: KOpt = None,
    format: FormatOpt = None,
    output: OutputOpt = None,
) -> None:
    """Even-length continued fraction of a rational in [0, 1)

    With --k, also reports whether every odd-index quotient is divisible by k.

    Examples:
        heavysift cf --x 2/5
        heavysift cf --x 3/7 --k 2
    """
    _dispatch(ctx, _with_output(RunConfig('cf', point=x, k=k), format, output, None))


@app.command('cf-sweep')
def cf_sweep(
    ctx: typer.Context,
    k: KOpt = None,
    q_max: Annotated[int | None, typer.Option('--qmax', '--q-max', help='Largest denominator swept')] = None,
    format: FormatOpt = None,
    output: OutputOpt = None,
) -> None:
    """Compare exact heaviness with the continued-fraction test over all p/q

    Writes CSV by default; exits 1 on any disagreement.

    Examples:
        heavysift cf-sweep --k 2 --qmax 300
        heavysift cf-sweep --k 3 --qmax 100 --format json --output sweep.json
    """
    _dispatch(ctx, _with_output(RunConfig('cf-sweep', k=k, q_max=q_max), format, output, None))


@app.command('multiples-scan')
def multiples_scan(
    ctx: typer.Context,
    target: TargetOpt = None,
    grid: GridOpt = None,
    horizon: HorizonOpt = None,
    format: FormatOpt = None,
    output: OutputOpt = None,
    tolerance: ToleranceOpt = None,
) -> None:
    """Grid points i/q whose multiples sequence is heavy

    Without --N the exact all-N decision is used.

    Examples:
        heavysift multiples-scan --target 0,1/2 --grid 64
        heavysift multiples-scan --target 0,1/3 --grid 1000 --N 500
    """
    config = RunConfig('multiples-scan', target=target, grid=grid, horizon=horizon)
    _dispatch(ctx, _with_output(config, format, output, tolerance))


@app.command()
def morse(
    ctx: typer.Context,
    length: Annotated[int | None, typer.Option('--length', help='Prefix length')] = None,
    scan: Annotated[bool, typer.Option('--scan', help='Scan every shift starting with --word for heaviness')] = False,
    word: Annotated[str | None, typer.Option('--word', help='Cylinder word, e.g. 11')] = None,
    positions: Annotated[int | None, typer.Option('--positions', help='Shift offsets scanned')] = None,
    horizon: HorizonOpt = None,
    format: FormatOpt = None,
    output: OutputOpt = None,
) -> None:
    """Morse sequence prefix, or a heaviness scan of its shifts

    Examples:
        heavysift morse --length 16
        heavysift morse --scan --word 11 --positions 131072 --N 65536 --format csv
    """
    config = RunConfig('morse', length=length, scan=scan, word=word, positions=positions, horizon=horizon)
    _dispatch(ctx, _with_output(config, format, output, None))


@app.command('poly-seq')
def poly_seq(
    ctx: typer.Context,
    alpha: Annotated[str | None, typer.Option('--alpha', help='Leading coefficient alpha')] = None,
    coefficients: Annotated[str | None, typer.Option('--coefficients', help='Lower coefficients a_0,...,a_(k-1)')] = None,
    horizon: HorizonOpt = None,
    format: FormatOpt = None,
    output: OutputOpt = None,
    tolerance: ToleranceOpt = None,
) -> None:
    """Polynomial sequence p(n) mod 1 read off a skew product

    Every value is checked against direct evaluation; exits 1 on a mismatch.

    Examples:
        heavysift poly-seq --alpha 1/7 --coefficients 0,1/3 --N 20
        heavysift poly-seq --alpha 'sqrt(2)' --coefficients 0,0 --N 100
    """
    config = RunConfig('poly-seq', alpha=alpha, coefficients=coefficients, horizon=horizon)
    _dispatch(ctx, _with_output(config, format, output, tolerance))


def _with_output(config: RunConfig, output_format: str | None, output: Path | None, tolerance: float | None) -> RunConfig:
    config.output_format = output_format
    config.output = output
    config.tolerance = tolerance
    return config


@app.command()
def help(
    ctx: typer.Context,
    command: Annotated[str | None, typer.Argument(help='Command to get help for')] = None,
) -> None:
    """Display help information for heavysift commands.

    Examples:
        heavysift help
        heavysift help trace
        heavysift help cf-sweep
    """
    click_ctx = ctx.parent or ctx

    if command is None:
        click.echo(format_help_with_colors(click_ctx), color=True)
        return

    cmd = click_ctx.command.get_command(click_ctx, command) if isinstance(click_ctx.command, click.Group) else None
    if cmd is None:
        console.print(f'[red]Error: Unknown command "{command}"[/red]')
        console.print('[dim]Run "heavysift help" to see available commands[/dim]')
        raise typer.Exit(2)

    with click.Context(cmd, info_name=command, parent=click_ctx) as cmd_ctx:
        click.echo(format_help_with_colors(cmd_ctx), color=True)


if __name__ == '__main__':
    app()
