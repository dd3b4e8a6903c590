"""Console and logging setup for polyharm."""

from __future__ import annotations

import logging

from rich.console import Console
from rich.logging import RichHandler

console = Console(stderr=True)


def configure_logging(level: str = "WARNING") -> None:
    """Route library log records through rich on stderr."""
    handler = RichHandler(console=console, show_path=False, show_time=False)
    root = logging.getLogger()
    for existing in list(root.handlers):
        if isinstance(existing, RichHandler):
            root.removeHandler(existing)
    root.addHandler(handler)
    root.setLevel(level.upper())
