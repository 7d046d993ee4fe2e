"""
Extremal families for union intersecting families that are far
from intersecting: find anchors whose heavy set has the largest
possible size, and extra star sets that keep the anchors and
extras union intersecting, or report that none exist.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import List, Optional, Tuple

from unionfam.bounds import anchor_width, width_plateau
from unionfam.constructions.anchors import check_nk, elements_mask
from unionfam.constructions.restricted import restricted_masks
from unionfam.kneser import (
    build_graph,
    contains_complete_multipartite,
    is_union_intersecting,
)
from unionfam.setfam import (
    BadParameters,
    Budget,
    Family,
    Infeasible,
    KSet,
    canonical_form,
)
from unionfam.setfam.bits import iter_bits, to_mask


@dataclass(frozen=True)
class ExtremalAnchors:
    anchors: Tuple[KSet, ...]
    extras: Tuple[KSet, ...]


def _heavy_mask(anchors: Tuple[int, ...], beta: int) -> int:
    counts = Counter(p for a in anchors for p in iter_bits(a))
    return to_mask(p for p, count in counts.items() if count >= beta + 1)


def _union_intersecting(masks: List[int], n: int, k: int, s: int, t: int):
    F = Family.from_masks(n, k, masks)
    return contains_complete_multipartite(build_graph(F), [s, t]) is None


def _find_extras(anchors, n, k, s, t, counter) -> Optional[List[int]]:
    """
    Ordered depth-first search for t - 1 star sets at 1, each
    disjoint from at least s anchors, that keep the anchors and
    extras (s,t)-union intersecting.
    """
    candidates = []
    for c in combinations(range(1, n), k - 1):
        m = 1 | to_mask(c)
        if sum(1 for a in anchors if not m & a) >= s:
            candidates.append(m)

    chosen: List[int] = []

    def extend(start: int) -> bool:
        counter.tick()
        if len(chosen) == t - 1:
            return True
        for idx in range(start, len(candidates)):
            chosen.append(candidates[idx])
            if _union_intersecting(list(anchors) + chosen, n, k, s, t):
                if extend(idx + 1):
                    return True
            chosen.pop()
        return False

    if extend(0):
        return chosen
    return None


def extremal_anchors(
    n: int, k: int, s: int, t: int, beta: int, budget: Optional[int] = None
) -> ExtremalAnchors:
    """
    Search for s + b distinct k-sets avoiding 1, with b the
    plateau end of `beta`, whose heavy set has exactly
    `anchor_width(k, s, beta)` elements, together with t - 1
    extra star sets.

    Up to relabeling the heavy set is {2, ..., w + 1}. Heavy
    elements account for at least w(b + 1) of the (s + b)k
    incidences, so the other elements are among the next
    (s + b)k - w(b + 1) labels. Anchor tuples are compared up
    to isomorphism and tried in lexicographic order.

    Raises:
        Infeasible: If no anchors or no extras exist
        BudgetExceeded: If the search runs past `budget` nodes
    """
    check_nk(n, k)
    if k < 3:
        raise BadParameters(f"Need k >= 3, got k={k}")
    if not 1 <= s <= t:
        raise BadParameters(f"Need 1 <= s <= t, got s={s}, t={t}")
    if beta < 0:
        raise BadParameters(f"Need beta >= 0, got beta={beta}")

    plateau = width_plateau(k, s, beta)
    width = anchor_width(k, s, beta)
    count = s + plateau
    spare = count * k - width * (plateau + 1)
    if spare < 0:
        raise Infeasible(
            "{} anchors have {} incidences, fewer than the {} a heavy "
            "set of size {} needs".format(
                count, count * k, width * (plateau + 1), width
            )
        )
    top = min(width + spare + 1, n)
    if width + 1 > n:
        raise Infeasible(f"Heavy set of size {width} doesn't fit in [{n}]")

    heavy = elements_mask(range(2, width + 2))
    window = [to_mask(c) for c in combinations(range(1, top), k)]
    logging.debug(
        "Extremal anchor search: %d anchors from %d candidates on "
        "[2, %d], heavy set size %d",
        count,
        len(window),
        top,
        width,
    )

    counter = Budget(budget, "extremal anchor search")
    seen = set()
    tried = 0
    for anchors in combinations(window, count):
        counter.tick()
        if _heavy_mask(anchors, plateau) != heavy:
            continue
        key = canonical_form(Family.from_masks(n, k, anchors)).certificate
        if key in seen:
            continue
        seen.add(key)
        tried += 1
        if not _union_intersecting(list(anchors), n, k, s, t):
            continue

        extras = _find_extras(anchors, n, k, s, t, counter)
        if extras is not None:
            logging.debug(
                "Found extremal anchors after %d classes and %d nodes",
                tried,
                counter.nodes,
            )
            return ExtremalAnchors(
                tuple(KSet.from_mask(n, a) for a in anchors),
                tuple(KSet.from_mask(n, m) for m in extras),
            )

    raise Infeasible(
        "No {} distinct {}-sets avoiding 1 have a heavy set of size {} "
        "with {} compatible extra sets ({} anchor classes tried)".format(
            count, k, width, t - 1, tried
        )
    )


def assemble_extremal(
    n: int, k: int, s: int, found: ExtremalAnchors
) -> Family:
    anchors = [a.mask for a in found.anchors]
    extras = [m.mask for m in found.extras]
    core = restricted_masks(n, k, anchors, s)
    return core.union(Family.from_masks(n, k, anchors + extras))


def removal_extremal(
    n: int, k: int, s: int, t: int, beta: int, budget: Optional[int] = None
) -> Family:
    """
    Build the largest (s,t)-union intersecting family that needs
    at least s + beta removals to become intersecting: star sets
    at 1 disjoint from at most s - 1 anchors, the anchors, and
    the extra sets found by `extremal_anchors`.
    """
    found = extremal_anchors(n, k, s, t, beta, budget)
    return assemble_extremal(n, k, s, found)



def extremal_removal_number(k: int, s: int, t: int, beta: int) -> int:
    """
    Removal number of `removal_extremal(n, k, s, t, beta)`:
    s plus the end of the anchor-width plateau. A (1,1)-union
    intersecting family is intersecting, so there it is 0.
    """
    if s == t == 1:
        return 0
    return s + width_plateau(k, s, beta)


def is_maximal_union_intersecting(
    F: Family, s: int, t: int, budget: Optional[int] = None
) -> bool:
    """
    Check that `F` is (s,t)-union intersecting and that adding
    any k-set outside it creates s sets whose union misses the
    union of t others.
    """
    if not is_union_intersecting(F, s, t, budget)[0]:
        return False

    members = set(F.masks)
    for c in combinations(range(F.n), F.k):
        m = to_mask(c)
        if m in members:
            continue
        G = Family.from_masks(F.n, F.k, list(F.masks) + [m])
        idx = G.index(KSet.from_mask(F.n, m))
        witness = contains_complete_multipartite(
            build_graph(G), [s, t], budget, through=idx
        )
        if witness is None:
            logging.debug(
                "Adding %s keeps the family (%d,%d)-union intersecting",
                KSet.from_mask(F.n, m),
                s,
                t,
            )
            return False
    return True
