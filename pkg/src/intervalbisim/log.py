"""Logging setup for the library and the command-line tool."""

from __future__ import annotations

import logging

from rich.console import Console
from rich.markup import escape
from rich.theme import Theme
from rich.traceback import install as install_rich_traceback

install_rich_traceback(show_locals=False)

DEBUG = logging.DEBUG
INFO = logging.INFO
WARNING = logging.WARNING
ERROR = logging.ERROR
CRITICAL = logging.CRITICAL

# stdout carries machine-readable results only.
_console = Console(
    stderr=True,
    theme=Theme(
        {
            "debug": "dim cyan",
            "info": "bold cyan",
            "warning": "bold yellow",
            "error": "bold red",
            "critical": "bold white on red",
        }
    ),
)


class RichHandler(logging.Handler):
    def emit(self, record: logging.LogRecord) -> None:
        try:
            level = record.levelname.lower()
            _console.print(
                f"[{level}]{record.levelname:<8}[/{level}] | "
                f"[cyan]{record.name}[/cyan] | "
                f"[{level}]{escape(record.getMessage())}[/{level}]",
                markup=True,
                highlight=False,
            )
            if record.exc_info:
                _console.print_exception(
                    show_locals=False, width=100, extra_lines=3, word_wrap=True
                )
        except Exception:
            self.handleError(record)


def create_logger(name: str, level: int = logging.WARNING) -> logging.Logger:
    """
    Creates a logger that renders through rich on stderr.

    Args:
        name (str): Logger name, usually ``__name__``.
        level (int, optional): Initial level. Defaults to logging.WARNING.

    Returns:
        logging.Logger: The configured logger.
    """
    logger = logging.getLogger(name)
    logger.setLevel(level)

    if not logger.handlers:
        rich_handler = RichHandler()
        rich_handler.setLevel(logging.DEBUG)
        logger.addHandler(rich_handler)

    logger.propagate = False
    return logger


def set_level(level: int) -> None:
    """Changes the level of every logger created under the package namespace."""
    for name, logger in logging.Logger.manager.loggerDict.items():
        if name.startswith("intervalbisim") and isinstance(logger, logging.Logger):
            logger.setLevel(level)


logger = create_logger("intervalbisim")
