"""
Peel a (1,t)-union intersecting family down to an intersecting
core by repeatedly deleting the neighbourhood of a set that still
has a disjoint partner.
"""

import logging
from dataclasses import dataclass
from typing import Optional, Tuple

from unionfam.bounds import binomial
from unionfam.kneser import build_graph, is_union_intersecting
from unionfam.setfam import (
    Family,
    KSet,
    NotUnionIntersecting,
    TheoremViolation,
)
from unionfam.setfam.bits import iter_bits, lowest, popcount
from unionfam.structure.setpairs import SetPairSystem, verify_set_pair_system


@dataclass(frozen=True)
class PeelingTrace:
    """
    Record of a peeling run. Round i picked the disjoint pair
    `pairs[i]` and deleted the first set's neighbourhood, so
    `core` and `removed` partition the original family.
    """

    pairs: Tuple[Tuple[KSet, KSet], ...]
    removed: Family
    core: Family

    @property
    def m(self) -> int:
        return len(self.pairs)

    def to_record(self) -> dict:
        return {
            "m": self.m,
            "pairs": [[list(b), list(c)] for b, c in self.pairs],
            "removed": self.removed.to_lists(),
            "core": self.core.to_lists(),
        }


def _check_trace(trace: PeelingTrace, k: int, t: int) -> None:
    m = trace.m
    pairs = [(frozenset(b), frozenset(c)) for b, c in trace.pairs]

    # mirror the rounds so every set meets every later partner
    # on both sides, giving 2m skew pairs of k-sets
    doubled = pairs + [(c, b) for b, c in reversed(pairs)]
    system = SetPairSystem(tuple(doubled))
    if not verify_set_pair_system(system, k, k):
        raise TheoremViolation(
            "Doubled peeling pairs {} are not a skew system".format(
                system.to_lists()
            )
        )

    if m > binomial(2 * k - 1, k - 1):
        raise TheoremViolation(
            f"Peeling took {m} rounds, more than C({2 * k - 1}, {k - 1})"
        )
    if len(trace.removed) > m * (t - 1):
        raise TheoremViolation(
            "Peeling removed {} sets in {} rounds with t={}".format(
                len(trace.removed), m, t
            )
        )


def peel(
    F: Family, t: int, check: bool = True, budget: Optional[int] = None
) -> PeelingTrace:
    """
    Peel `F` into an intersecting core.

    Each round takes the lexicographically smallest set B with a
    disjoint partner left, records its smallest partner C, then
    deletes every remaining set disjoint from B.

    Args:
        F: A (1,t)-union intersecting family
        t: Union parameter
        check:
            Rebuild the doubled set-pair system from the trace and
            verify the round and removal bounds it implies
        budget: Node budget for the union intersecting check

    Raises:
        NotUnionIntersecting: If `F` has t+1 sets, t of them
            disjoint from the remaining one
        TheoremViolation: If `check` finds a violated bound
    """
    ok, witness = is_union_intersecting(F, 1, t, budget)
    if not ok:
        raise NotUnionIntersecting(
            "Family is not (1,{})-union intersecting: {}".format(
                t, [[list(s) for s in part] for part in witness.sets(F)]
            )
        )

    adjacency = build_graph(F).adjacency
    alive = (1 << len(F)) - 1
    removed = 0
    pairs = []
    while True:
        for b in iter_bits(alive):
            if adjacency[b] & alive:
                break
        else:
            break

        neighbours = adjacency[b] & alive
        pairs.append((F[b], F[lowest(neighbours)]))
        removed |= neighbours
        alive &= ~neighbours

    trace = PeelingTrace(
        tuple(pairs),
        F.subfamily(iter_bits(removed)),
        F.subfamily(iter_bits(alive)),
    )
    logging.debug(
        "Peeled %d sets in %d rounds, core has %d sets",
        popcount(removed),
        trace.m,
        len(trace.core),
    )
    if check:
        _check_trace(trace, F.k, t)
    return trace
