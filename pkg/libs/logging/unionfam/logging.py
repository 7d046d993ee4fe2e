import logging
import sys
from pathlib import Path
from typing import Optional, TextIO, Union

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def configure_logging(
    filename: Optional[Union[str, Path]] = None,
    verbose: bool = False,
    stream: Optional[TextIO] = None,
) -> None:
    """
    Set up logging format in a consistent way across the workbench.
    Log records are written to stderr by default so that families
    and reports written to stdout can be piped without filtering.

    Args:
        filename:
            Name of file to which logging messages will also be written
        verbose:
            If true, log at `DEBUG` verbosity, otherwise log at
            `INFO` verbosity.
        stream:
            Stream to use in place of stderr
    """
    level = logging.DEBUG if verbose else logging.INFO
    logging.basicConfig(
        format=LOG_FORMAT,
        level=level,
        stream=stream or sys.stderr,
        force=True,
    )
    logging.captureWarnings(True)

    logger = logging.getLogger()
    if filename is not None:
        formatter = logging.Formatter(LOG_FORMAT)
        handler = logging.FileHandler(filename=filename, mode="w")
        handler.setFormatter(formatter)
        logger.addHandler(handler)
