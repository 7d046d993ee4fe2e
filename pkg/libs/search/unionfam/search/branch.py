import logging
import time
from dataclasses import dataclass
from typing import Iterable, Optional

from unionfam.bounds import BoundQuery, evaluate_bound
from unionfam.report import SKIPPED, CheckLedger
from unionfam.search.constraints import (
    ConstraintSpec,
    SearchResult,
    Universe,
    satisfies,
)
from unionfam.setfam import (
    BadParameters,
    Budget,
    BudgetExceeded,
    Family,
    Infeasible,
    TheoremViolation,
)
from unionfam.setfam.bits import iter_bits, lowest, popcount


class _OutOfTime(Exception):
    pass


class _BranchAndBound:
    def __init__(
        self, U: Universe, counter: Budget, deadline: Optional[float]
    ):
        self.U = U
        self.adjacency = U.graph.adjacency
        self.counter = counter
        self.deadline = deadline
        self.best: Optional[int] = None
        self.best_size = -1

        # a K_{1,t} is a vertex of degree t, so freeness is a
        # degree condition and needs no subgraph search
        pattern = U.spec.pattern
        self.star_t = None
        if pattern is not None and len(pattern) == 2 and min(pattern) == 1:
            self.star_t = max(pattern)

    def tick(self):
        self.counter.tick()
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise _OutOfTime()

    def admissible(self, chosen: int, candidates: int) -> int:
        """The candidates that can join `chosen` on their own"""
        adjacency = self.adjacency
        if self.star_t is not None:
            t = self.star_t
            for w in iter_bits(chosen):
                if popcount(adjacency[w] & chosen) >= t - 1:
                    candidates &= ~adjacency[w]
            for u in iter_bits(candidates):
                if popcount(adjacency[u] & chosen) >= t:
                    candidates &= ~(1 << u)
            return candidates

        for u in iter_bits(candidates):
            if self.U.creates_pattern(chosen, u):
                candidates &= ~(1 << u)
        return candidates

    def search(self, chosen: int, candidates: int) -> None:
        self.tick()
        if popcount(chosen) + popcount(candidates) <= self.best_size:
            return
        if not candidates:
            if self.U.upward_ok(chosen):
                self.best, self.best_size = chosen, popcount(chosen)
            return

        v = lowest(candidates)
        rest = candidates & ~(1 << v)
        included = chosen | (1 << v)
        self.search(included, self.admissible(included, rest))
        self.search(chosen, rest)

    def run(self) -> None:
        U = self.U
        chosen = U.required
        if not U.hereditary_ok(chosen):
            raise Infeasible(
                "The required sets {} already break the pattern".format(
                    U.spec.parameters()["must_contain"]
                )
            )
        everything = (1 << U.size) - 1
        candidates = everything & ~chosen & ~U.forbidden

        if U.spec.anchored or not U.size:
            self.search(chosen, self.admissible(chosen, candidates))
            return

        # every nonempty family has a relabeling through {1, ..., k}
        if not U.creates_pattern(0, 0):
            rest = self.admissible(1, candidates & ~1)
            self.search(1, rest)
        if self.best is None and U.upward_ok(0):
            self.best, self.best_size = 0, 0


def branch_and_bound_max(
    n: int,
    k: int,
    spec: ConstraintSpec,
    budget: Optional[int] = None,
    seconds: Optional[float] = None,
) -> SearchResult:
    """
    Find a largest family of k-sets of [n] satisfying `spec`.

    Sets are branched on in lexicographic order, including
    before excluding, after dropping every candidate that would
    complete the forbidden pattern with the sets already chosen.
    A branch is cut once its size plus its remaining candidates
    can't beat the best family found so far.

    Args:
        n: Size of the ground set
        k: Size of the member sets
        spec: Constraints the family must satisfy
        budget: Maximum number of search nodes
        seconds: Maximum wall clock time for the search

    Returns:
        The largest family found. When a budget runs out,
        `optimal` is `False` and the family is the best one
        found so far, empty if there was none.

    Raises:
        Infeasible: If the search finishes without finding any
            family that satisfies `spec`
    """
    if not 1 <= k <= n:
        raise BadParameters(f"Need 1 <= k <= n, got n={n}, k={k}")
    U = Universe(n, k, spec)
    counter = Budget(budget, "branch and bound")
    deadline = None if seconds is None else time.monotonic() + seconds
    search = _BranchAndBound(U, counter, deadline)

    hit = False
    try:
        search.run()
    except (BudgetExceeded, _OutOfTime):
        hit = True

    if search.best is None:
        if not hit:
            raise Infeasible(
                "No family of {}-sets of [{}] satisfies {}".format(
                    k, n, spec.parameters()
                )
            )
        witness = Family(n, k)
    else:
        witness = U.subfamily(search.best)
        if not satisfies(witness, spec):
            raise TheoremViolation(
                "Branch and bound witness {} fails its constraints".format(
                    witness.to_lists()
                )
            )

    logging.debug(
        "Branch and bound on n=%d, k=%d: size %d after %d nodes%s",
        n,
        k,
        len(witness),
        counter.nodes,
        ", budget exhausted" if hit else "",
    )
    return SearchResult(len(witness), witness, not hit, counter.nodes, hit)


@dataclass(frozen=True)
class ThresholdScan:
    first_match: Optional[int]
    ledger: CheckLedger


THRESHOLD_CLAIM = (
    "the largest (s,t)-union intersecting family with removal "
    "number at least s + beta attains the removal bound"
)


def threshold_scan(
    k: int,
    s: int,
    t: int,
    beta: int,
    ns: Iterable[int],
    budget: Optional[int] = None,
) -> ThresholdScan:
    """
    Compare the exact maximum under pattern `[s, t]` and removal
    number at least `s + beta` with the `union-removal` bound
    for each n in `ns`. The bound only holds for large enough n,
    so a mismatch is recorded as skipped data rather than a
    failure, and `first_match` is the first n where they agree.
    """
    spec = ConstraintSpec(pattern=(s, t), removal_min=(2, s + beta))
    ledger = CheckLedger()
    check_id = "removal-threshold"
    first = None
    for n in ns:
        params = {"n": n, "k": k, "s": s, "t": t, "beta": beta}
        try:
            bound = evaluate_bound(
                BoundQuery("union-removal", n=n, k=k, s=s, t=t, beta=beta)
            )
        except BadParameters as e:
            ledger.skip(check_id, THRESHOLD_CLAIM, params, None, str(e))
            continue

        try:
            result = branch_and_bound_max(n, k, spec, budget)
        except Infeasible as e:
            ledger.skip(check_id, THRESHOLD_CLAIM, params, bound, str(e))
            continue

        if not result.optimal:
            ledger.skip_for_budget(
                check_id,
                THRESHOLD_CLAIM,
                params,
                bound,
                result.nodes_explored,
            )
        elif result.max_size == bound:
            ledger.add(check_id, THRESHOLD_CLAIM, params, bound, bound)
            first = n if first is None else first
        else:
            ledger.add(
                check_id,
                THRESHOLD_CLAIM,
                params,
                bound,
                result.max_size,
                SKIPPED,
                "maximum {} differs from the bound at n={}".format(
                    result.max_size, n
                ),
            )

    logging.info(
        "Removal threshold scan for k=%d, s=%d, t=%d, beta=%d: "
        "first match at %s",
        k,
        s,
        t,
        beta,
        first,
    )
    return ThresholdScan(first, ledger)
