"""
Exhaustive checks of the size bounds for stars restricted by
anchors: families of s + beta distinct k-sets avoiding 1, and
the sets through 1 disjoint from at most s - 1 of them.

Since every anchor avoids 1, element 1 is isolated in each anchor
family, and two anchor families are related by a relabeling fixing
1 exactly when they are isomorphic at all. The default walk
therefore visits one anchor family per isomorphism class.
"""

import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from unionfam.bounds import (
    BoundQuery,
    anchor_width,
    binomial,
    evaluate_bound,
    restricted_star_size,
)
from unionfam.constructions.anchors import ksets
from unionfam.report import CheckLedger
from unionfam.setfam import (
    BadParameters,
    Budget,
    BudgetExceeded,
    Family,
    canonical_form,
)
from unionfam.setfam.bits import iter_bits, popcount

CLAIMS = {
    "restricted-star-lower": "the restricted star contains every star "
    "set meeting the heavy elements",
    "restricted-star-upper": "the restricted star is no larger than "
    "the bound at the maximal heavy set size",
    "restricted-star-equality-needs-width": "a restricted star of "
    "maximal size has a heavy set of maximal size",
    "restricted-star-width-gives-equality": "a heavy set of maximal "
    "size gives a restricted star of maximal size",
    "restricted-star-single-upper": "with s = 1 the restricted star "
    "is no larger than the single anchor bound",
    "restricted-star-single-equality": "with s = 1 the single anchor "
    "bound is attained exactly when the anchors share k - 1 elements",
}


@dataclass
class _Tally:
    examined: int = 0
    violations: Dict[str, int] = field(default_factory=Counter)
    examples: Dict[str, List[List[int]]] = field(default_factory=dict)

    def record(self, check_id: str, anchors: Sequence[int]) -> None:
        self.violations[check_id] += 1
        example = [[p + 1 for p in iter_bits(a)] for a in anchors]
        current = self.examples.get(check_id)
        if current is None or example < current:
            self.examples[check_id] = example

    def merge(self, other: "_Tally") -> None:
        self.examined += other.examined
        for check_id, count in other.violations.items():
            self.violations[check_id] += count
        for check_id, example in other.examples.items():
            current = self.examples.get(check_id)
            if current is None or example < current:
                self.examples[check_id] = example


class _Sweep:
    def __init__(self, n: int, k: int, s: int, beta: int):
        self.n, self.k, self.s, self.beta = n, k, s, beta
        self.count = s + beta
        masks = list(ksets(n, k))
        self.stars = [m for m in masks if m & 1]
        self.candidates = [m for m in masks if not m & 1]

        self.width = anchor_width(k, s, beta)
        self.upper = evaluate_bound(
            BoundQuery("restricted-star", n=n, k=k, s=s, beta=beta)
        )
        self.single = None
        if s == 1:
            self.single = evaluate_bound(
                BoundQuery("restricted-star-single", n=n, k=k, beta=beta)
            )

    def checks(self) -> List[str]:
        checks = [
            "restricted-star-lower",
            "restricted-star-upper",
            "restricted-star-equality-needs-width",
            "restricted-star-width-gives-equality",
        ]
        if self.single is not None:
            checks.append("restricted-star-single-upper")
            if self.beta >= 1:
                checks.append("restricted-star-single-equality")
        return checks

    def size(self, anchors: Sequence[int]) -> int:
        size = 0
        for m in self.stars:
            missed = sum(1 for a in anchors if not m & a)
            if missed < self.s:
                size += 1
        return size

    def heavy(self, anchors: Sequence[int]) -> int:
        counts = Counter(p for a in anchors for p in iter_bits(a))
        return sum(1 for c in counts.values() if c >= self.beta + 1)

    def check(self, anchors: Sequence[int], tally: _Tally) -> None:
        size = self.size(anchors)
        heavy = self.heavy(anchors)
        tally.examined += 1

        if restricted_star_size(self.n, self.k, heavy) > size:
            tally.record("restricted-star-lower", anchors)
        if size > self.upper:
            tally.record("restricted-star-upper", anchors)
        at_width = heavy == self.width
        if size == self.upper and not at_width:
            tally.record("restricted-star-equality-needs-width", anchors)
        if at_width and size != self.upper:
            tally.record("restricted-star-width-gives-equality", anchors)

        if self.single is None:
            return
        if size > self.single:
            tally.record("restricted-star-single-upper", anchors)
        if self.beta >= 1:
            if (size == self.single) != (heavy == self.k - 1):
                tally.record("restricted-star-single-equality", anchors)

    def classes(self, counter: Budget) -> List[Tuple[int, ...]]:
        """
        One anchor family per isomorphism class, built a set at a
        time from the representatives of the previous size.
        """
        level = {b"": ()}
        for _ in range(self.count):
            following = {}
            for anchors in level.values():
                for m in self.candidates:
                    if m in anchors:
                        continue
                    counter.tick()
                    extended = tuple(sorted(anchors + (m,)))
                    F = Family.from_masks(self.n, self.k, extended)
                    key = canonical_form(F).certificate
                    following.setdefault(key, extended)
            level = following
        return [level[key] for key in sorted(level)]


_sweep: Optional[_Sweep] = None


def _init(n: int, k: int, s: int, beta: int) -> None:
    global _sweep
    _sweep = _Sweep(n, k, s, beta)


def _check_block(first: int) -> _Tally:
    """Every anchor family whose smallest member is candidate `first`"""
    tally = _Tally()
    head = _sweep.candidates[first]
    rest = _sweep.candidates[first + 1 :]
    for others in combinations(rest, _sweep.count - 1):
        _sweep.check((head,) + others, tally)
    return tally


def _exhaustive(workers: int) -> _Tally:
    tally = _Tally()
    blocks = range(len(_sweep.candidates))
    if workers <= 1:
        for first in blocks:
            tally.merge(_check_block(first))
        return tally

    sweep = _sweep
    ex = ProcessPoolExecutor(
        workers,
        initializer=_init,
        initargs=(sweep.n, sweep.k, sweep.s, sweep.beta),
    )
    with ex:
        futures = [ex.submit(_check_block, first) for first in blocks]
        for future in as_completed(futures):
            tally.merge(future.result())
    return tally


def sweep_restricted_star(
    n: int,
    k: int,
    s: int,
    beta: int,
    exhaustive: bool = False,
    workers: int = 1,
    budget: Optional[int] = None,
) -> CheckLedger:
    """
    Check the restricted star bounds against every family of
    s + beta distinct k-sets avoiding 1.

    Each check gets one record whose expected value is zero
    violations; failing records name the lexicographically
    smallest violating anchor family.

    Args:
        exhaustive:
            Visit every combination of anchors instead of one
            per isomorphism class
        workers: Processes for the exhaustive walk
        budget:
            Maximum number of anchor families to canonicalize,
            or to check in the exhaustive walk

    Returns:
        Ledger with one record per check. The single anchor
        checks are included only for s = 1.
    """
    if not 1 <= k < n:
        raise BadParameters(f"Need 1 <= k < n, got n={n}, k={k}")
    if s < 1 or beta < 0:
        raise BadParameters(
            f"Need s >= 1 and beta >= 0, got s={s}, beta={beta}"
        )

    _init(n, k, s, beta)
    sweep = _sweep
    params = {
        "n": n,
        "k": k,
        "s": s,
        "beta": beta,
        "mode": "exhaustive" if exhaustive else "classes",
    }
    ledger = CheckLedger()

    counter = Budget(budget, "restricted star sweep")
    try:
        if exhaustive:
            counter.tick(binomial(len(sweep.candidates), sweep.count))
            tally = _exhaustive(workers)
        else:
            tally = _Tally()
            for anchors in sweep.classes(counter):
                sweep.check(anchors, tally)
    except BudgetExceeded:
        for check_id in sweep.checks():
            ledger.skip_for_budget(
                check_id, CLAIMS[check_id], params, 0, counter.nodes
            )
        return ledger

    for check_id in sweep.checks():
        violations = tally.violations[check_id]
        if violations:
            reason = "first counterexample {}".format(
                tally.examples[check_id]
            )
        else:
            reason = f"{tally.examined} anchor families checked"
        ledger.add(
            check_id, CLAIMS[check_id], params, 0, violations, None, reason
        )

    logging.info(
        "Restricted star sweep on n=%d, k=%d, s=%d, beta=%d checked "
        "%d anchor families, %d violations",
        n,
        k,
        s,
        beta,
        tally.examined,
        sum(tally.violations.values()),
    )
    return ledger
