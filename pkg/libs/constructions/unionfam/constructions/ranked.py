"""
The families obtained from a star by keeping the sets that meet
enough anchors, then adding back the anchors and t - 1 star sets
that miss them. With s anchors they rank below the extremal
family by the size of the anchors' union; with s + 1 anchors
they beat every s-anchor family of the same union size.
"""

from typing import Iterable, List, Optional, Sequence

from unionfam.constructions.anchors import (
    anchor_list,
    avoid,
    check_nk,
    mask_elements,
    smallest,
)
from unionfam.constructions.restricted import restricted_masks
from unionfam.kneser import is_union_intersecting
from unionfam.setfam import (
    BadParameters,
    Family,
    NotUnionIntersecting,
)

Anchors = Sequence[Iterable[int]]


def _missing_enough(anchors: List[int], s: int):
    """Star sets at 1 disjoint from at least s anchors"""

    def keep(m):
        if not m & 1:
            return False
        return sum(1 for a in anchors if not m & a) >= s

    return keep


def _ranked(n, k, s, t, anchors, count, extras) -> Family:
    check_nk(n, k)
    if not 1 <= s <= t:
        raise BadParameters(f"Need 1 <= s <= t, got s={s}, t={t}")
    masks = anchor_list(n, k, anchors)
    if len(masks) != count:
        raise BadParameters(
            "Expected {} anchors, got {}".format(count, len(masks))
        )
    for a in masks:
        avoid(a, 1, "Anchor")

    core = restricted_masks(n, k, masks, s)
    tails = smallest(
        n, k, t - 1, _missing_enough(masks, s), "Extra set", extras
    )
    return core.union(Family.from_masks(n, k, masks + tails))


def ranked_family(
    n: int,
    k: int,
    s: int,
    t: int,
    anchors: Anchors,
    extras: Optional[Anchors] = None,
) -> Family:
    """
    Star sets at 1 meeting the union of s anchors, the anchors,
    and t - 1 star sets avoiding that union. Its size is
    C(n-1, k-1) - C(n-u-1, k-1) + s + t - 1 where u is the size
    of the union.

    Args:
        anchors: s distinct k-sets avoiding 1
        extras:
            The t - 1 star sets avoiding the anchors. Defaults
            to the lexicographically smallest ones.
    """
    return _ranked(n, k, s, t, anchors, s, extras)


def ranked_family_plus(
    n: int,
    k: int,
    s: int,
    t: int,
    anchors: Anchors,
    extras: Optional[Anchors] = None,
    additional: Optional[Anchors] = None,
) -> Family:
    """
    The same construction over s + 1 anchors: star sets at 1
    disjoint from at most s - 1 anchors, the anchors, and t - 1
    star sets disjoint from at least s of them.

    Args:
        anchors: s + 1 distinct k-sets avoiding 1
        extras: As for `ranked_family`
        additional:
            Further star sets to add. The result is checked to
            still be (s,t)-union intersecting.

    Raises:
        NotUnionIntersecting: If `additional` creates s sets
            whose union misses the union of t others
    """
    F = _ranked(n, k, s, t, anchors, s + 1, extras)
    if additional is None:
        return F

    masks = anchor_list(n, k, additional, "Additional set")
    for m in masks:
        if not m & 1:
            raise BadParameters(
                "Additional set {} does not contain 1".format(
                    mask_elements(m)
                )
            )
    F = F.union(Family.from_masks(n, k, masks))
    ok, witness = is_union_intersecting(F, s, t)
    if not ok:
        raise NotUnionIntersecting(
            "Additional sets create the ({},{}) witness {}".format(
                s, t, [[list(x) for x in part] for part in witness.sets(F)]
            )
        )
    return F
