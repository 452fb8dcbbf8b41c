"""Custom CLI help formatter matching uv's style.

Provides colored, well-structured help output without boxes or excessive formatting.
"""

from __future__ import annotations

import re
from collections.abc import Sequence

import click
from click import Context

HIGHLIGHTED_SECTIONS = ('Commands', 'System options', 'Time options', 'Sweep options', 'Output options', 'Global options')

# Option name fragments -> help section; first match wins.
OPTION_SECTIONS = (
    (('--system', '--obs', '--x', '--points', '--grid', '--target', '--alpha', '--coefficients', '--atom'), 'System options'),
    (('--N', '--n1', '--n2', '--max-steps', '--length', '--positions', '--word', '--scan'), 'Time options'),
    (('--seed', '--atoms', '--count', '--k', '--qmax', '--dichotomy'), 'Sweep options'),
    (('--format', '--output', '--tolerance'), 'Output options'),
)


class UVStyleHelpFormatter(click.HelpFormatter):
    """Help formatter that matches uv's clean, colored style."""

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self.current_section = None

    def write_heading(self, heading: str) -> None:
        """Write a section heading in bright green."""
        if heading:
            styled = click.style(f'{heading}:', fg='bright_green', bold=True)
            self.write(f'{styled}\n')

    def write_dl(
        self,
        rows: Sequence[tuple[str, str]],
        col_max: int = 30,
        col_spacing: int = 2,
    ) -> None:
        """Write a definition list with proper alignment and colors."""
        widths = [len(row[0]) for row in rows]
        max_width = min(max(widths) if widths else 0, col_max)

        for first, second in rows:
            # Padding is computed from the uncoloured length
            first_len = len(first)
            if self.current_section in HIGHLIGHTED_SECTIONS:
                self.write(f'  {click.style(first, fg="bright_blue")}')
            else:
                self.write(f'  {first}')

            if second:
                padding = ' ' * (max_width - first_len + col_spacing)
                self.write(f'{padding}{second}')
            self.write('\n')


def _option_section(opt_name: str) -> str:
    flags = re.split(r'[\s,/]+', opt_name)
    for fragments, section in OPTION_SECTIONS:
        if any(flag in fragments for flag in flags):
            return section
    return 'Global options'


def _main_paragraphs(help_text: str) -> str:
    """Help text without its Common Options and Examples paragraphs."""
    kept = []
    for paragraph in help_text.split('\n\n'):
        if paragraph.strip().startswith(('Common Options:', 'Examples:')):
            break
        kept.append(paragraph)
    return '\n\n'.join(kept)


def _write_command_summary(formatter: UVStyleHelpFormatter, name: str, cmd: click.Command) -> None:
    paragraphs = (cmd.help or '').split('\n\n')
    summary = paragraphs[0].replace('\n', ' ').strip() if paragraphs else ''

    formatter.write(f'  {click.style(name, fg="bright_blue")}\n')
    if summary:
        formatter.write(f'    {summary}\n')

    for paragraph in paragraphs:
        if not paragraph.strip().startswith('Examples:'):
            continue
        lines = [line.strip() for line in paragraph.replace('Examples:', '').strip().split('\n')]
        first_example = next((line for line in lines if line and not line.startswith('#')), None)
        if first_example:
            formatter.write(f'      {click.style(first_example, fg="yellow")}\n')
    formatter.write('\n')


def format_help_with_colors(ctx: Context) -> str:
    """Format help text with uv-style colors and structure."""
    formatter = UVStyleHelpFormatter(width=ctx.terminal_width, max_width=120)

    if ctx.command.help:
        formatter.write_paragraph()
        help_text = ctx.command.help
        if not isinstance(ctx.command, click.Group):
            help_text = _main_paragraphs(help_text)
        formatter.write_text(help_text)

    formatter.write_paragraph()
    formatter.current_section = 'Usage'
    usage_text = ctx.command.get_usage(ctx).replace('Usage: ', '')
    usage_heading = click.style('Usage:', fg='bright_green', bold=True)
    formatter.write(f'{usage_heading} {click.style(usage_text, fg="bright_blue")}\n')

    if not isinstance(ctx.command, click.Group):
        arguments = []
        for param in ctx.command.get_params(ctx):
            if isinstance(param, click.Argument):
                record = param.get_help_record(ctx)
                if record:
                    arguments.append(record)
        if arguments:
            formatter.write_paragraph()
            formatter.write_heading('Arguments')
            formatter.current_section = 'Arguments'
            formatter.write_dl(arguments)

    if isinstance(ctx.command, click.Group) and ctx.command.list_commands(ctx):
        formatter.write_paragraph()
        formatter.write_heading('Commands')
        formatter.current_section = 'Commands'
        for name in ctx.command.list_commands(ctx):
            cmd = ctx.command.get_command(ctx, name)
            if cmd and not cmd.hidden:
                _write_command_summary(formatter, name, cmd)

    sections: dict[str, list[tuple[str, str]]] = {}
    for param in ctx.command.get_params(ctx):
        if not isinstance(param, click.Option):
            continue
        record = param.get_help_record(ctx)
        # `heavysift help` replaces --help
        if not record or '--help' in record[0]:
            continue
        sections.setdefault(_option_section(record[0]), []).append(record)

    for section in ('System options', 'Time options', 'Sweep options', 'Output options', 'Global options'):
        if section in sections:
            formatter.write_paragraph()
            formatter.write_heading(section)
            formatter.current_section = section
            formatter.write_dl(sections[section])

    if not isinstance(ctx.command, click.Group) and ctx.command.help:
        for paragraph in ctx.command.help.split('\n\n'):
            if paragraph.strip().startswith('Examples:'):
                formatter.write_paragraph()
                formatter.write_heading('Examples')
                formatter.current_section = 'Examples'
                for line in paragraph.replace('Examples:', '').strip().split('\n'):
                    line = line.strip()
                    if not line:
                        continue
                    style = {'dim': True} if line.startswith('#') else {'fg': 'yellow'}
                    formatter.write(f'  {click.style(line, **style)}\n')
                break

    if ctx.command.epilog:
        formatter.write_paragraph()
        formatter.write_text(ctx.command.epilog)

    return formatter.getvalue()
