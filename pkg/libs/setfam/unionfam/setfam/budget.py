from typing import Optional

from unionfam.setfam.exceptions import BudgetExceeded


class Budget:
    """
    Node counter shared by the exact searches. Every search ticks
    once per node; going past `limit` raises `BudgetExceeded`
    rather than letting the search return an unproven answer.
    """

    def __init__(self, limit: Optional[int] = None, what: str = "search"):
        self.limit = limit
        self.what = what
        self.nodes = 0

    def tick(self, count: int = 1) -> None:
        self.nodes += count
        if self.limit is not None and self.nodes > self.limit:
            raise BudgetExceeded(self.nodes, self.limit, self.what)

    @property
    def exhausted(self) -> bool:
        return self.limit is not None and self.nodes >= self.limit
