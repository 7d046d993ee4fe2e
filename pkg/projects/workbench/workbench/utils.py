import os

import psutil

from unionfam.setfam import BadParameters

THREADS_VAR = "UNIONFAM_THREADS"


def num_workers() -> int:
    """
    Worker processes for the parallel suites: `UNIONFAM_THREADS`
    if it's set, otherwise the number of physical cores.
    """
    value = os.environ.get(THREADS_VAR)
    if value is not None:
        try:
            workers = int(value)
        except ValueError:
            raise BadParameters(
                f"{THREADS_VAR} must be an integer, got '{value}'"
            ) from None
        if workers < 1:
            raise BadParameters(f"{THREADS_VAR} must be positive, got {value}")
        return workers
    return psutil.cpu_count(logical=False) or 1
