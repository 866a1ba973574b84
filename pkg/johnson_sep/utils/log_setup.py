"""Logging setup - one rich handler on the package logger."""
import logging

from rich.logging import RichHandler

PACKAGE_LOGGER = "johnson_sep"


def setup_logging(level: str | int = "WARNING") -> logging.Logger:
    """Attach a RichHandler to the package logger (idempotent)."""
    logger = logging.getLogger(PACKAGE_LOGGER)
    logger.setLevel(level)
    if not any(isinstance(h, RichHandler) for h in logger.handlers):
        handler = RichHandler(rich_tracebacks=True, show_path=False)
        handler.setFormatter(logging.Formatter("%(message)s"))
        logger.addHandler(handler)
    logger.propagate = False
    return logger
