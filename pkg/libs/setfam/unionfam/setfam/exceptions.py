"""
Error types shared by every unionfam lib. Input problems are
`ValueError`s so callers can treat them uniformly; search budgets and
failed proved statements are kept apart since they are not the
caller's fault.
"""


class ElementOutOfRange(ValueError):
    pass


class WrongSetSize(ValueError):
    pass


class DuplicateSet(ValueError):
    pass


class NotAPermutation(ValueError):
    pass


class ParameterMismatch(ValueError):
    pass


class BadParameters(ValueError):
    pass


class EmptyFamily(ValueError):
    pass


class NotUnionIntersecting(ValueError):
    pass


class SizeMismatch(ValueError):
    pass


class AnchorViolation(ValueError):
    pass


class Infeasible(ValueError):
    pass


class TooLarge(ValueError):
    pass


class LimitExceeded(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    def __init__(self, nodes: int, budget: int, what: str = "search"):
        self.nodes = nodes
        self.budget = budget
        super().__init__(
            "{} exceeded its budget of {} nodes".format(what, budget)
        )


class TheoremViolation(AssertionError):
    """
    A proved inequality failed on concrete input. This always
    points at a bug in the workbench, never at the input.
    """
