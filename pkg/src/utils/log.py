"""Logging setup for the command line."""

import logging

from rich.logging import RichHandler

from utils.progress import console

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")


def configure_logging(level: str = "WARNING") -> None:
    """Route every library logger through a single RichHandler on stderr."""
    level = level.upper()
    if level not in LOG_LEVELS:
        raise ValueError(f"unknown log level '{level}'")
    root = logging.getLogger()
    for handler in list(root.handlers):
        if isinstance(handler, RichHandler):
            root.removeHandler(handler)
    root.addHandler(RichHandler(console=console, show_path=False, markup=False))
    root.setLevel(level)
