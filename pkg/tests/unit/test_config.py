"""Unit tests for configuration defaults and validation."""

import copy

from heavysift.config.defaults import DEFAULT_CONFIG
from heavysift.config.defaults import OUTPUT_FORMATS
from heavysift.config.validator import validate_config


def test_default_config_structure():
    """Test that default config has expected structure."""
    for section in ('numeric', 'output', 'finite', 'search', 'multiples', 'morse'):
        assert section in DEFAULT_CONFIG


def test_default_config_values():
    """Test the documented defaults."""
    assert DEFAULT_CONFIG['numeric']['tolerance'] == 1e-9
    assert DEFAULT_CONFIG['output']['default_format'] is None
    assert DEFAULT_CONFIG['output']['use_colors'] is True
    assert DEFAULT_CONFIG['multiples']['q_max'] == 300
    assert DEFAULT_CONFIG['morse']['word'] == '11'
    assert OUTPUT_FORMATS == ('json', 'csv', 'toon')


def test_defaults_are_valid():
    """Test that the defaults pass validation."""
    assert validate_config(DEFAULT_CONFIG) == (True, [])


def _with(section: str, key: str, value):
    config = copy.deepcopy(DEFAULT_CONFIG)
    config[section][key] = value
    return config


def test_validator_rejects_negative_tolerance():
    """Test that tolerances must be nonnegative numbers."""
    valid, errors = validate_config(_with('numeric', 'tolerance', -1.0))
    assert not valid
    assert 'numeric.tolerance' in errors[0]
    assert not validate_config(_with('numeric', 'tolerance', True))[0]


def test_validator_rejects_unknown_format():
    """Test that only known output formats are accepted."""
    valid, errors = validate_config(_with('output', 'default_format', 'yaml'))
    assert not valid
    assert 'output.default_format' in errors[0]
    assert validate_config(_with('output', 'default_format', 'csv'))[0]


def test_validator_rejects_non_bool_colors():
    """Test that use_colors must be a boolean."""
    assert not validate_config(_with('output', 'use_colors', 'yes'))[0]


def test_validator_checks_integer_settings():
    """Test integer ranges across sections."""
    assert not validate_config(_with('finite', 'atoms', 0))[0]
    assert not validate_config(_with('finite', 'seed', 1.5))[0]
    assert not validate_config(_with('search', 'grid', 0))[0]
    assert not validate_config(_with('multiples', 'k', 1))[0]
    assert not validate_config(_with('morse', 'positions', 0))[0]


def test_validator_checks_f_range():
    """Test that f_min <= 0 <= f_max."""
    valid, errors = validate_config(_with('finite', 'f_min', 1))
    assert not valid
    assert 'f_min' in errors[0]


def test_validator_checks_morse_word():
    """Test that the Morse word is a nonempty bit string."""
    assert not validate_config(_with('morse', 'word', ''))[0]
    assert not validate_config(_with('morse', 'word', '12'))[0]
    assert validate_config(_with('morse', 'word', '0110'))[0]


def test_validator_collects_every_error():
    """Test that all problems are reported at once."""
    config = _with('search', 'max_steps', 0)
    config['multiples']['q_max'] = 1
    valid, errors = validate_config(config)
    assert not valid
    assert len(errors) == 2
