"""Default configuration values.

Every CLI option that is not given on the command line falls back to these.
"""

from heavysift.core.trace import DEFAULT_TOLERANCE

DEFAULT_CONFIG = {
    'numeric': {
        'tolerance': DEFAULT_TOLERANCE,
    },
    'output': {
        # None lets each subcommand pick (csv for sweeps, json otherwise)
        'default_format': None,
        'use_colors': True,
    },
    'finite': {
        'seed': 0,
        'atoms': 8,
        'count': 500,
        'horizon': 20,
        'f_min': -5,
        'f_max': 5,
    },
    'search': {
        'max_steps': 1000,
        'grid': 64,
    },
    'multiples': {
        'k': 2,
        'q_max': 300,
    },
    'morse': {
        'length': 64,
        'horizon': 2**16,
        'positions': 2**17,
        'word': '11',
    },
}

OUTPUT_FORMATS = ('json', 'csv', 'toon')
