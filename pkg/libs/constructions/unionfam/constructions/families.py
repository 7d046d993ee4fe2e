from typing import Iterable, Optional, Sequence

from unionfam.constructions.anchors import (
    anchor,
    avoid,
    check_nk,
    elements_mask,
    mask_elements,
    select,
    smallest,
)
from unionfam.setfam import (
    AnchorViolation,
    BadParameters,
    ElementOutOfRange,
    Family,
    Infeasible,
)
from unionfam.setfam.bits import popcount


def star(n: int, k: int, center: int = 1) -> Family:
    """All k-subsets of [n] containing `center`"""
    check_nk(n, k)
    if not 1 <= center <= n:
        raise ElementOutOfRange(f"Center {center} is outside [1, {n}]")
    bit = 1 << (center - 1)
    return select(n, k, lambda m: m & bit)


def hilton_milner(
    n: int, k: int, B: Optional[Iterable[int]] = None
) -> Family:
    """
    The sets containing 1 that meet a fixed k-set `B` avoiding 1,
    together with `B` itself. `B` defaults to {2, ..., k + 1}.
    """
    check_nk(n, k)
    if n < k + 1:
        raise Infeasible(f"Need n >= k + 1, got n={n}, k={k}")
    if B is None:
        B = range(2, k + 2)
    b = anchor(n, k, B, "Set B")
    avoid(b, 1, "Set B")
    return select(n, k, lambda m: m == b or (m & 1 and m & b))


def hilton_milner_triangle(n: int, k: int) -> Family:
    """The k-sets with at least two elements in {1, 2, 3}"""
    check_nk(n, k)
    if n < 3 or k < 2:
        raise BadParameters(f"Need n >= 3 and k >= 2, got n={n}, k={k}")
    return select(n, k, lambda m: popcount(m & 0b111) >= 2)


def spine_family(
    n: int,
    k: int,
    i: int,
    head: Optional[Iterable[int]] = None,
    spine: Optional[Iterable[int]] = None,
) -> Family:
    """
    The intersecting family built from an (i+1)-set `head`
    containing 1 and a (k-1)-set `spine` disjoint from it: sets
    containing the spine and meeting the head, sets containing
    the whole head, and star sets at 1 meeting the spine.

    At i = 0 this is the star at 1, and at i = 1 it is a
    Hilton-Milner family.

    Args:
        n: Ground set size
        k: Set size
        i: One less than the size of the head, 0 <= i <= k - 1
        head: Defaults to {1, ..., i + 1}
        spine: Defaults to {i + 2, ..., i + k}
    """
    check_nk(n, k)
    if not 0 <= i <= k - 1:
        raise BadParameters(f"Need 0 <= i <= k - 1, got i={i}, k={k}")
    if n < i + k:
        raise Infeasible(f"Need n >= i + k, got n={n}, i={i}, k={k}")

    if head is None:
        head = range(1, i + 2)
    if spine is None:
        spine = range(i + 2, i + k + 1)
    J = anchor(n, i + 1, head, "Head")
    if not J & 1:
        raise AnchorViolation(
            "Head {} must contain 1".format(mask_elements(J))
        )
    E = anchor(n, k - 1, spine, "Spine")
    avoid(E, J, "Spine")

    def keep(m):
        if m & E == E and m & J:
            return True
        return m & J == J or (m & 1 and m & E)

    return select(n, k, keep)


def interval_family(n: int, k: int, i: int) -> Family:
    """
    The intervals [2, k + 1] and [i + 1, k + i] together with the
    star sets at 1 that avoid [2, k + i]. The two intervals
    coincide when i = 1.
    """
    check_nk(n, k)
    if not 1 <= i <= k:
        raise BadParameters(f"Need 1 <= i <= k, got i={i}, k={k}")
    if n < k + i:
        raise Infeasible(f"Need n >= k + i, got n={n}, k={k}, i={i}")

    first = elements_mask(range(2, k + 2))
    second = elements_mask(range(i + 1, k + i + 1))
    blocked = elements_mask(range(2, k + i + 1))
    return select(
        n,
        k,
        lambda m: m in (first, second) or (m & 1 and not m & blocked),
    )


def block_family(
    n: int,
    k: int,
    s: int,
    t: int,
    extras: Optional[Sequence[Iterable[int]]] = None,
) -> Family:
    """
    The (s,t)-union intersecting family built from s consecutive
    disjoint blocks [(j-1)k + 2, jk + 1] after 1: star sets at 1
    meeting the blocks, the blocks themselves, and t - 1 star sets
    avoiding them.

    Args:
        extras:
            The t - 1 star sets avoiding the blocks. Defaults
            to the lexicographically smallest ones.

    Raises:
        Infeasible: If the blocks don't fit, or fewer than t - 1
            star sets avoid them
    """
    check_nk(n, k)
    if not 1 <= s <= t:
        raise BadParameters(f"Need 1 <= s <= t, got s={s}, t={t}")
    if n < s * k + 1:
        raise Infeasible(f"Need n >= sk + 1, got n={n}, s={s}, k={k}")

    covered = elements_mask(range(2, s * k + 2))
    blocks = [
        elements_mask(range((j - 1) * k + 2, j * k + 2))
        for j in range(1, s + 1)
    ]
    tails = smallest(
        n,
        k,
        t - 1,
        lambda m: m & 1 and not m & covered,
        "Extra set",
        extras,
    )
    keep = set(blocks) | set(tails)
    return select(n, k, lambda m: m in keep or (m & 1 and m & covered))
