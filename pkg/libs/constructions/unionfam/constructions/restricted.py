"""
Star subfamilies restricted by a list of anchor sets, and the
padded and layered spine families assembled from them.
"""

from collections import Counter
from typing import FrozenSet, Iterable, List, Optional, Sequence

from unionfam.constructions.anchors import (
    anchor,
    anchor_list,
    avoid,
    check_nk,
    mask_elements,
    select,
    smallest,
)
from unionfam.setfam import (
    AnchorViolation,
    BadParameters,
    DuplicateSet,
    Family,
    Infeasible,
    TheoremViolation,
)
from unionfam.setfam.bits import iter_bits

Anchors = Sequence[Iterable[int]]


def heavy_elements(anchors: Anchors, s: int) -> FrozenSet[int]:
    """
    Elements lying in at least m - s + 1 of the m anchors. With
    s = m this is the union of the anchors, and with s = 1 their
    intersection.
    """
    sets = [frozenset(a) for a in anchors]
    if len(set(sets)) != len(sets):
        raise DuplicateSet(
            "Anchors {} are not pairwise distinct".format(
                [sorted(a) for a in sets]
            )
        )
    if not 1 <= s <= len(sets):
        raise BadParameters(
            "Need 1 <= s <= number of anchors, got s={} with {} "
            "anchors".format(s, len(sets))
        )

    beta = len(sets) - s
    counts = Counter(x for a in sets for x in a)
    return frozenset(x for x, count in counts.items() if count >= beta + 1)


def restricted_masks(
    n: int, k: int, anchors: Sequence[int], s: int, center: int = 1
) -> Family:
    """
    Unvalidated core of `restricted_star`, taking anchor masks.
    A set qualifies when it contains `center`, avoids every
    smaller element and is disjoint from at most s - 1 anchors.
    """
    bit = 1 << (center - 1)
    lower = bit - 1

    def keep(m):
        if not m & bit or m & lower:
            return False
        missed = 0
        for a in anchors:
            if not m & a:
                missed += 1
                if missed >= s:
                    return False
        return True

    return select(n, k, keep)


def restricted_star(
    n: int, k: int, anchors: Anchors, s: int, center: int = 1
) -> Family:
    """
    The sets containing `center` that avoid {1, ..., center - 1}
    and are disjoint from at most s - 1 of the anchors.

    Args:
        n: Ground set size
        k: Set size
        anchors: Pairwise distinct k-sets avoiding {1, ..., center}
        s: Union parameter, at most the number of anchors
        center: Element every member contains

    Raises:
        AnchorViolation: If an anchor meets {1, ..., center}
        DuplicateSet: If two anchors coincide
    """
    check_nk(n, k)
    if not 1 <= center <= n:
        raise BadParameters(f"Center {center} is outside [1, {n}]")
    masks = anchor_list(n, k, anchors)
    if not 1 <= s <= len(masks):
        raise BadParameters(
            "Need 1 <= s <= number of anchors, got s={} with {} "
            "anchors".format(s, len(masks))
        )
    fixed = (1 << center) - 1
    for a in masks:
        avoid(a, fixed, "Anchor")
    return restricted_masks(n, k, masks, s, center)


class _Spine:
    """
    Anchors shared by the padded and layered spine families: a
    head J = {1, ..., r} plus points x_1 < ... < x_i, a (k-1)-set
    spine E avoiding J, and the sets A_j = E + x_j.
    """

    def __init__(
        self,
        n: int,
        k: int,
        i: int,
        t: int,
        r: int,
        head: Optional[Iterable[int]],
        spine: Optional[Iterable[int]],
    ):
        check_nk(n, k)
        if not 0 <= i <= k - 1:
            raise BadParameters(f"Need 0 <= i <= k - 1, got i={i}, k={k}")
        if t < 1 or r < 1:
            raise BadParameters(f"Need t, r >= 1, got t={t}, r={r}")
        if n < r + i + k - 1:
            raise Infeasible(
                "Need n >= r + i + k - 1, got n={}, r={}, i={}, k={}".format(
                    n, r, i, k
                )
            )

        fixed = (1 << r) - 1
        if head is None:
            head = range(1, r + i + 1)
        if spine is None:
            spine = range(r + i + 1, r + i + k)
        self.J = anchor(n, r + i, head, "Head")
        if self.J & fixed != fixed:
            raise AnchorViolation(
                "Head {} must contain 1, ..., {}".format(
                    mask_elements(self.J), r
                )
            )
        self.E = anchor(n, k - 1, spine, "Spine")
        avoid(self.E, self.J, "Spine")

        self.n, self.k, self.t, self.r = n, k, t, r
        self.lower = fixed >> 1
        self.points = [1 << p for p in iter_bits(self.J & ~fixed)]
        self.A = [self.E | x for x in self.points]

    def blocks(self, given: Optional[Sequence[Anchors]]) -> List[int]:
        """
        For each point x_j, t - 1 sets avoiding the spine that
        miss exactly {1, ..., r - 1} and x_j from the head.
        """
        if given is not None and len(given) != len(self.points):
            raise BadParameters(
                "Expected {} blocks, got {}".format(
                    len(self.points), len(given)
                )
            )

        chosen = []
        for j, x in enumerate(self.points):
            missing = self.lower | x

            def keep(m, missing=missing):
                return not m & self.E and self.J & ~m == missing

            block = smallest(
                self.n,
                self.k,
                self.t - 1,
                keep,
                f"Block {j + 1} set",
                None if given is None else given[j],
            )
            chosen.extend(block)

        # different blocks miss different points of the head
        if len(set(chosen)) != len(chosen):
            raise TheoremViolation(
                "Blocks {} share a set".format(
                    [mask_elements(m) for m in chosen]
                )
            )
        return chosen


def padded_spine_family(
    n: int,
    k: int,
    i: int,
    t: int,
    head: Optional[Iterable[int]] = None,
    spine: Optional[Iterable[int]] = None,
    blocks: Optional[Sequence[Anchors]] = None,
) -> Family:
    """
    The spine family on head J = {1, x_1, ..., x_i} and spine E,
    padded with t - 1 sets per point x_j that contain J - {x_j}
    and avoid E + x_j. It is (1,t)-union intersecting and has
    i(t - 1) more sets than the spine family; with t = 1 the two
    coincide.

    Args:
        n: Ground set size
        k: Set size
        i: Number of points besides 1 in the head
        t: Union parameter
        head: Defaults to {1, ..., i + 1}
        spine: Defaults to {i + 2, ..., i + k}
        blocks:
            One list of t - 1 sets per point, in increasing
            order of the points. Defaults to the
            lexicographically smallest admissible sets.
    """
    spine_ = _Spine(n, k, i, t, 1, head, spine)
    core = restricted_masks(n, k, spine_.A, 1)
    extra = spine_.A + spine_.blocks(blocks)
    return core.union(Family.from_masks(n, k, extra))


def layered_spine_family(
    n: int,
    k: int,
    i: int,
    t: int,
    r: int,
    completed: bool = True,
    head: Optional[Iterable[int]] = None,
    spine: Optional[Iterable[int]] = None,
    blocks: Optional[Sequence[Anchors]] = None,
) -> Family:
    """
    The spine construction moved to the star at r: sets
    containing r, avoiding {1, ..., r - 1} and meeting every
    A_j = E + x_j, plus t - 1 sets per point that contain
    J - {1, ..., r - 1, x_j} and avoid E + x_j.

    Args:
        completed:
            Also include the stars at 1, ..., r - 1 and the sets
            A_j, which makes the family K_{t, ..., t, 1}-free with
            the largest size. Without them, the literal layer
            at r is returned.
        head:
            The set {1, ..., r, x_1, ..., x_i}. Defaults to
            {1, ..., r + i}
        spine: Defaults to {r + i + 1, ..., r + i + k - 1}
    """
    spine_ = _Spine(n, k, i, t, r, head, spine)
    core = restricted_masks(n, k, spine_.A, 1, center=r)
    extra = spine_.blocks(blocks)
    if completed:
        extra += spine_.A
        lower = spine_.lower
        stars = select(n, k, lambda m: m & lower)
        core = core.union(stars)
    return core.union(Family.from_masks(n, k, extra))
