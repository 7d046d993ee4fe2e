"""
Shared plumbing for the generators: validating the anchor sets
they are parametrized by, and enumerating the k-sets of [n] that
satisfy a membership predicate.
"""

from itertools import combinations
from typing import Callable, Iterable, List, Optional, Sequence

from unionfam.setfam import (
    AnchorViolation,
    BadParameters,
    DuplicateSet,
    Family,
    Infeasible,
    KSet,
    WrongSetSize,
)
from unionfam.setfam.bits import iter_bits, to_mask


def elements_mask(elements: Iterable[int]) -> int:
    return to_mask(x - 1 for x in elements)


def mask_elements(mask: int) -> List[int]:
    return [p + 1 for p in iter_bits(mask)]


def check_nk(n: int, k: int) -> None:
    if not 1 <= k <= n:
        raise BadParameters(f"Need 1 <= k <= n, got n={n}, k={k}")


def anchor(n: int, size: int, elements: Iterable[int], what: str) -> int:
    """Validate an anchor set of a given size and return its mask"""
    s = KSet(n, tuple(elements))
    if len(s) != size:
        raise WrongSetSize(
            "{} {} has {} elements, expected {}".format(
                what, list(s), len(s), size
            )
        )
    return s.mask


def anchor_list(
    n: int, k: int, anchors: Sequence[Iterable[int]], what: str = "Anchor"
) -> List[int]:
    masks = [anchor(n, k, a, what) for a in anchors]
    if len(set(masks)) != len(masks):
        raise DuplicateSet(
            "{}s {} are not pairwise distinct".format(
                what, [mask_elements(m) for m in masks]
            )
        )
    return masks


def avoid(mask: int, forbidden: int, what: str) -> None:
    if mask & forbidden:
        raise AnchorViolation(
            "{} {} meets {}".format(
                what, mask_elements(mask), mask_elements(forbidden)
            )
        )


def ksets(n: int, k: int) -> Iterable[int]:
    """Masks of all k-subsets of [n] in lexicographic order"""
    for c in combinations(range(n), k):
        yield to_mask(c)


def select(n: int, k: int, keep: Callable[[int], bool]) -> Family:
    return Family.from_masks(n, k, [m for m in ksets(n, k) if keep(m)])


def smallest(
    n: int,
    k: int,
    count: int,
    keep: Callable[[int], bool],
    what: str,
    given: Optional[Sequence[Iterable[int]]] = None,
) -> List[int]:
    """
    Either validate `given` sets against `keep`, or take the
    lexicographically first `count` k-sets satisfying it.

    Raises:
        Infeasible: If fewer than `count` sets qualify
        AnchorViolation: If a given set doesn't qualify
    """
    if given is not None:
        masks = anchor_list(n, k, given, what)
        if len(masks) != count:
            raise BadParameters(
                "Expected {} {}s, got {}".format(count, what, len(masks))
            )
        for mask in masks:
            if not keep(mask):
                raise AnchorViolation(
                    "{} {} is not admissible".format(
                        what, mask_elements(mask)
                    )
                )
        return masks

    masks = []
    if count == 0:
        return masks
    for mask in ksets(n, k):
        if keep(mask):
            masks.append(mask)
            if len(masks) == count:
                return masks
    raise Infeasible(
        "Only {} admissible {}s exist on [{}] with k={}, need {}".format(
            len(masks), what, n, k, count
        )
    )
