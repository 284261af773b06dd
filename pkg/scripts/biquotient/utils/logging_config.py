"""Logging setup for the engine."""

import logging
import sys

from scripts.biquotient.config import LOG_LEVEL


def setup_logging(verbose: bool = False) -> None:
    """Configure root logger. Logs go to stderr; stdout is reserved for results."""
    level = logging.DEBUG if verbose else getattr(logging, LOG_LEVEL.upper(), logging.INFO)
    fmt = "%(asctime)s [%(levelname)s] %(name)s: %(message)s"
    logging.basicConfig(
        level=level,
        format=fmt,
        datefmt="%H:%M:%S",
        stream=sys.stderr,
        force=True,
    )
    # Quieten noisy libraries
    logging.getLogger("concurrent.futures").setLevel(logging.WARNING)
