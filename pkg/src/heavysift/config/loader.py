"""Load and merge configuration from TOML files.

Handles loading from ~/.config/heavysift/config.toml, merging with defaults
and applying environment overrides.
"""

import copy
import logging
import os
import tomllib
from pathlib import Path
from typing import Any

from heavysift.config.defaults import DEFAULT_CONFIG

logger = logging.getLogger(__name__)

TOLERANCE_ENV = 'HEAVYSIFT_TOLERANCE'


def default_config_path() -> Path:
    """~/.config/heavysift/config.toml."""
    return Path.home() / '.config' / 'heavysift' / 'config.toml'


def load_config(config_file: Path | None = None, use_file: bool = True) -> dict[str, Any]:
    """Load configuration from file and merge with defaults.

    Args:
        config_file: Optional path to config file (defaults to ~/.config/heavysift/config.toml)
        use_file: False skips every config file and keeps only defaults and environment

    Returns:
        Merged configuration dictionary
    """
    config = copy.deepcopy(DEFAULT_CONFIG)

    if use_file:
        path = config_file if config_file is not None else default_config_path()
        if path.exists():
            try:
                with path.open('rb') as f:
                    user_config = tomllib.load(f)
            except (tomllib.TOMLDecodeError, OSError) as e:
                # Unreadable files fall back to defaults
                logger.warning('Ignoring config file %s: %s', path, e)
            else:
                _deep_merge(config, user_config)

    _apply_environment(config)
    return config


def _apply_environment(config: dict[str, Any]) -> None:
    """Apply HEAVYSIFT_* environment overrides in place."""
    raw = os.environ.get(TOLERANCE_ENV)
    if raw is None:
        return
    try:
        config['numeric']['tolerance'] = float(raw)
    except ValueError:
        logger.warning('Ignoring %s=%r: not a number', TOLERANCE_ENV, raw)


def _deep_merge(base: dict[str, Any], override: dict[str, Any]) -> None:
    """Recursively merge override dict into base dict.

    Args:
        base: Base dictionary (will be modified in-place)
        override: Override dictionary to merge in
    """
    for key, value in override.items():
        if key in base and isinstance(base[key], dict) and isinstance(value, dict):
            _deep_merge(base[key], value)
        else:
            base[key] = value
