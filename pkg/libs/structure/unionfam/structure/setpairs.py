"""
Skew cross-intersecting set-pair systems: sequences of pairs
(A_i, B_i) with A_i and B_i disjoint and A_i meeting every later
B_j. Such a system with |A_i| = k and |B_i| = l has at most
C(k + l, k) pairs.
"""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, Optional, Sequence, Tuple

from unionfam.bounds import binomial
from unionfam.setfam import (
    BadParameters,
    Budget,
    Family,
    SizeMismatch,
    TheoremViolation,
    canonical_form,
)
from unionfam.setfam.bits import iter_bits, to_mask

Pair = Tuple[FrozenSet[int], FrozenSet[int]]


@dataclass(frozen=True)
class SetPairSystem:
    pairs: Tuple[Pair, ...]

    @classmethod
    def from_lists(
        cls, pairs: Iterable[Tuple[Iterable[int], Iterable[int]]]
    ) -> "SetPairSystem":
        return cls(tuple((frozenset(a), frozenset(b)) for a, b in pairs))

    def __len__(self) -> int:
        return len(self.pairs)

    def to_lists(self):
        return [[sorted(a), sorted(b)] for a, b in self.pairs]


def verify_set_pair_system(S: SetPairSystem, k: int, l: int) -> bool:
    """
    Check the skew conditions on `S`. A system that passes must
    also respect the C(k + l, k) length bound; one that doesn't
    means the caller or this library has a bug, and raises.

    Raises:
        SizeMismatch: If some A_i isn't a k-set or some B_i an l-set
        TheoremViolation: If a valid system is too long
    """
    for i, (a, b) in enumerate(S.pairs):
        if len(a) != k or len(b) != l:
            raise SizeMismatch(
                "Pair {} has sizes ({}, {}), expected ({}, {})".format(
                    i, len(a), len(b), k, l
                )
            )

    for i, (a, b) in enumerate(S.pairs):
        if a & b:
            return False
        for _, later in S.pairs[i + 1 :]:
            if not a & later:
                return False

    if len(S) > binomial(k + l, k):
        raise TheoremViolation(
            "Skew system with k={}, l={} has {} pairs, more than "
            "C({}, {}) = {}".format(
                k, l, len(S), k + l, k, binomial(k + l, k)
            )
        )
    return True


def _hitting_set(
    sets: Sequence[int], avoid: int, size: int, ground: int
) -> Optional[int]:
    """
    An l-subset of [ground] missing `avoid` that meets every mask
    in `sets`, or `None`. The set is padded with the smallest free
    elements once every mask is hit.
    """
    available = ((1 << ground) - 1) & ~avoid

    def extend(chosen: int, budget: int) -> Optional[int]:
        for mask in sets:
            if not mask & chosen:
                break
        else:
            pad = available & ~chosen
            for p in iter_bits(pad):
                if budget == 0:
                    break
                chosen |= 1 << p
                budget -= 1
            return chosen if budget == 0 else None

        if budget == 0:
            return None
        for p in iter_bits(mask & available & ~chosen):
            result = extend(chosen | (1 << p), budget - 1)
            if result is not None:
                return result
        return None

    return extend(0, size)


class _LongestSystemSearch:
    def __init__(self, k: int, l: int, ground: int, counter: Budget):
        self.k, self.l, self.ground = k, l, ground
        self.counter = counter
        self.candidates = [
            to_mask(c) for c in combinations(range(ground), k)
        ]
        self.memo: Dict[bytes, int] = {}

    def _key(self, chosen: Tuple[int, ...]) -> bytes:
        F = Family.from_masks(self.ground, self.k, chosen)
        return canonical_form(F).certificate

    def extensions(self, chosen: Tuple[int, ...]):
        for a in self.candidates:
            if a in chosen:
                continue
            b = _hitting_set(chosen, a, self.l, self.ground)
            if b is not None:
                yield a, b

    def longest(self, chosen: Tuple[int, ...]) -> int:
        """Most pairs that can still follow the A-sets in `chosen`"""
        key = self._key(chosen)
        if key in self.memo:
            return self.memo[key]

        self.counter.tick()
        best = 0
        for a, _ in self.extensions(chosen):
            best = max(best, 1 + self.longest(tuple(sorted(chosen + (a,)))))
        self.memo[key] = best
        return best


def longest_set_pair_system(
    k: int, l: int, ground: int, budget: Optional[int] = None
) -> SetPairSystem:
    """
    Find a longest skew set-pair system with k-sets and l-sets
    over [ground] by exhaustive search. Search states are the
    sets of A's chosen so far, merged up to relabeling of the
    ground set.
    """
    if k < 1 or l < 1:
        raise BadParameters(f"Need k, l >= 1, got k={k}, l={l}")
    if not k <= ground <= 12:
        raise BadParameters(f"Need k <= ground <= 12, got ground={ground}")

    search = _LongestSystemSearch(k, l, ground, Budget(budget, "set pairs"))
    target = search.longest(())
    logging.debug(
        "Longest skew system for k=%d, l=%d on %d points has %d pairs "
        "(%d states)",
        k,
        l,
        ground,
        target,
        len(search.memo),
    )

    # walk back down the memo to recover one optimal system
    pairs, chosen = [], ()
    while len(pairs) < target:
        remaining = target - len(pairs)
        for a, b in search.extensions(chosen):
            after = tuple(sorted(chosen + (a,)))
            if 1 + search.longest(after) == remaining:
                pairs.append((a, b))
                chosen = after
                break

    system = SetPairSystem(
        tuple(
            (
                frozenset(p + 1 for p in iter_bits(a)),
                frozenset(p + 1 for p in iter_bits(b)),
            )
            for a, b in pairs
        )
    )
    if not verify_set_pair_system(system, k, l):
        raise TheoremViolation(
            f"Reconstructed set-pair system {system.to_lists()} is not skew"
        )
    return system


def max_set_pair_system(
    k: int, l: int, ground: int, budget: Optional[int] = None
) -> int:
    """Length of a longest skew set-pair system over [ground]"""
    return len(longest_set_pair_system(k, l, ground, budget))
