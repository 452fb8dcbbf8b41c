"""Tests for subcommand dispatch, output formats and exit statuses."""

import copy
import json

from heavysift.commands.result import CommandResult
from heavysift.commands.runner import EXIT_FAILED_CHECK
from heavysift.commands.runner import EXIT_OK
from heavysift.commands.runner import EXIT_USAGE
from heavysift.commands.runner import HANDLERS
from heavysift.commands.runner import render
from heavysift.commands.runner import resolve_format
from heavysift.commands.runner import run
from heavysift.commands.specs import RunConfig
from heavysift.config.defaults import DEFAULT_CONFIG


def trace_config(**overrides) -> RunConfig:
    return RunConfig('trace', system='rotation:1/3', observable='indicator:0,1/3', point='0', horizon=3, **overrides)


def test_every_subcommand_has_a_handler():
    """Test the dispatch table."""
    assert len(HANDLERS) == 17
    assert 'cf-sweep' in HANDLERS
    assert 'two-sided-search' in HANDLERS


def test_run_trace_json(capsys):
    """Test the default JSON report on stdout."""
    assert run(trace_config()) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data['deficits'] == ['0', '2/3', '1/3', '0']
    assert data['heaviness']['heavy'] is True


def test_run_trace_csv(capsys):
    """Test --format csv."""
    assert run(trace_config(output_format='csv')) == EXIT_OK
    assert capsys.readouterr().out == 'n,deficit\n0,0\n1,2/3\n2,1/3\n3,0\n'


def test_cf_sweep_defaults_to_csv(capsys):
    """Test that sweeps write CSV unless asked otherwise."""
    assert run(RunConfig('cf-sweep', k=2, q_max=5)) == EXIT_OK
    assert capsys.readouterr().out.splitlines()[0] == 'p,q,heavy,divisible,agree,delta,first_failure'


def test_configured_format_beats_subcommand_default():
    """Test the precedence --format > config > subcommand default."""
    result = CommandResult({}, default_format='csv')
    settings = copy.deepcopy(DEFAULT_CONFIG)
    settings['output']['default_format'] = 'toon'
    assert resolve_format(RunConfig('cf-sweep'), result) == 'csv'
    assert resolve_format(RunConfig('cf-sweep', settings=settings), result) == 'toon'
    assert resolve_format(RunConfig('cf-sweep', settings=settings, output_format='json'), result) == 'json'


def test_render_ends_with_newline():
    """Test that every format ends with exactly one newline."""
    result = CommandResult({'a': 1}, [{'a': 1}], ('a',))
    for output_format in ('json', 'csv', 'toon'):
        text = render(result, output_format)
        assert text.endswith('\n')
        assert not text.endswith('\n\n')


def test_unknown_format_is_usage_error(capsys):
    """Test that an unknown format exits 2."""
    assert run(trace_config(output_format='yaml')) == EXIT_USAGE
    assert 'Unknown output format' in capsys.readouterr().err


def test_precondition_violation_is_usage_error(capsys):
    """Test that a missing observable exits 2 with a message on stderr."""
    assert run(RunConfig('trace', system='rotation:1/3', point='0', horizon=3)) == EXIT_USAGE
    captured = capsys.readouterr()
    assert captured.out == ''
    assert 'needs an observable' in captured.err


def test_unknown_subcommand(capsys):
    """Test dispatch of a name with no handler."""
    assert run(RunConfig('collatz')) == EXIT_USAGE
    assert 'Unknown subcommand' in capsys.readouterr().err


def test_failed_check_exits_one(mocker, capsys):
    """Test that a report with a failed check is still written and exits 1."""
    mocker.patch.dict(HANDLERS, {'trace': lambda config: CommandResult({'passed': False}, ok=False)})
    assert run(trace_config()) == EXIT_FAILED_CHECK
    captured = capsys.readouterr()
    assert json.loads(captured.out) == {'passed': False}
    assert 'a check failed' in captured.err


def test_output_file(tmp_path, capsys):
    """Test --output writes the report to a file instead of stdout."""
    path = tmp_path / 'trace.json'
    assert run(trace_config(output=path)) == EXIT_OK
    assert capsys.readouterr().out == ''
    assert json.loads(path.read_text())['horizon'] == 3


def test_unwritable_output(tmp_path):
    """Test that a directory as --output exits 2."""
    assert run(trace_config(output=tmp_path)) == EXIT_USAGE
