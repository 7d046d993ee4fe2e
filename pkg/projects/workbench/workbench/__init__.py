__version__ = "0.1.0"

from .config import COMMANDS, RunConfig  # noqa: E402
from .main import run  # noqa: E402
from .sampling import random_family  # noqa: E402
