"""Logging setup for the CLI.

Library modules log through ``logging.getLogger(__name__)``; the CLI routes
those records to stderr through rich so standard output only carries reports.
"""

import logging

from rich.console import Console
from rich.logging import RichHandler


def configure_logging(verbose: bool = False) -> None:
    """Install a RichHandler on the heavysift logger.

    Args:
        verbose: DEBUG level when True, WARNING otherwise
    """
    logger = logging.getLogger('heavysift')
    for handler in list(logger.handlers):
        if isinstance(handler, RichHandler):
            logger.removeHandler(handler)
    handler = RichHandler(console=Console(stderr=True), show_time=False, show_path=False)
    handler.setFormatter(logging.Formatter('%(message)s'))
    logger.addHandler(handler)
    logger.setLevel(logging.DEBUG if verbose else logging.WARNING)
