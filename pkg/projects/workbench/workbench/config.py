from dataclasses import asdict, dataclass, field
from typing import Any, Dict, Optional

from unionfam.setfam import BadParameters

COMMANDS = {
    "construct": None,
    "bound": None,
    "verify": (
        "constructions",
        "restricted-star",
        "peel",
        "pairs-bound",
        "setpairs",
        "isomorphism",
        "extremal",
        "oracle",
        "all",
    ),
    "search": ("max", "maximal", "threshold"),
}
FORMATS = ("json", "csv", "md")


@dataclass(frozen=True)
class RunConfig:
    """
    Everything a workbench run depends on. Two runs with equal
    configs produce byte-identical reports.

    Args:
        command: One of `construct`, `bound`, `verify` or `search`
        target:
            Generator name for `construct`, bound id for `bound`,
            and the suite or search mode otherwise
        params: Keyword parameters passed through to the target
        seed: Seed for every randomized suite
        format: Report format, one of `json`, `csv` or `md`
        budget: Node budget for each exact search, `None` for none
        count:
            Number of random items drawn by the randomized
            suites, `None` for their full counts
    """

    command: str
    target: str
    params: Dict[str, Any] = field(default_factory=dict)
    seed: int = 42
    format: str = "json"
    budget: Optional[int] = None
    count: Optional[int] = None

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise BadParameters(
                "Unknown command '{}', choose from {}".format(
                    self.command, ", ".join(COMMANDS)
                )
            )
        targets = COMMANDS[self.command]
        if targets is not None and self.target not in targets:
            raise BadParameters(
                "Unknown {} target '{}', choose from {}".format(
                    self.command, self.target, ", ".join(targets)
                )
            )
        if self.format not in FORMATS:
            raise BadParameters(
                "Unknown format '{}', choose from {}".format(
                    self.format, ", ".join(FORMATS)
                )
            )
        if self.budget is not None and self.budget < 0:
            raise BadParameters(
                f"Budget must be nonnegative, got {self.budget}"
            )
        if self.count is not None and self.count < 1:
            raise BadParameters(f"Count must be positive, got {self.count}")

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)
