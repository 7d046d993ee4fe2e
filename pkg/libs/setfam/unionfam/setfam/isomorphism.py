"""
Isomorphism testing of uniform families by backtracking over
element images. Candidates are pruned by element invariants
(degree and co-degree profile) and every partial assignment is
checked by comparing the multisets of partial images, so the
search never needs to reach a leaf to reject a bad prefix.
"""

from collections import Counter
from typing import List, Optional, Sequence, Tuple

from unionfam.setfam.bits import iter_bits, popcount
from unionfam.setfam.exceptions import ParameterMismatch
from unionfam.setfam.family import Family

Permutation = Tuple[int, ...]


def _columns(F: Family) -> List[int]:
    # bitset, over set indices, of the sets containing each element
    cols = [0] * F.n
    for j, mask in enumerate(F.masks):
        for p in iter_bits(mask):
            cols[p] |= 1 << j
    return cols


def _codegrees(cols: Sequence[int]) -> List[List[int]]:
    n = len(cols)
    return [[popcount(cols[x] & cols[y]) for y in range(n)] for x in range(n)]


def _element_invariants(cols, codeg) -> List[tuple]:
    invariants = []
    for x, col in enumerate(cols):
        profile = sorted(c for y, c in enumerate(codeg[x]) if y != x)
        invariants.append((popcount(col), tuple(profile)))
    return invariants


def _intersection_profile(F: Family) -> List[tuple]:
    masks = F.masks
    profile = []
    for i, a in enumerate(masks):
        sizes = sorted(popcount(a & b) for j, b in enumerate(masks) if j != i)
        profile.append(tuple(sizes))
    return sorted(profile)


def is_isomorphic(
    F: Family, G: Family
) -> Tuple[bool, Optional[Permutation]]:
    """
    Decide whether some permutation of [n] maps `F` onto `G`.

    Args:
        F: First family
        G: Second family, on the same (n, k)

    Returns:
        A pair `(found, sigma)`. When `found` is true, `sigma` is the
        one-line notation of a permutation with
        `apply_permutation(F, sigma) == G`, otherwise `None`.
    """
    if (F.n, F.k) != (G.n, G.k):
        raise ParameterMismatch(
            "Families on (n={}, k={}) and (n={}, k={}) can't "
            "be isomorphic".format(F.n, F.k, G.n, G.k)
        )
    if len(F) != len(G):
        return False, None

    n = F.n
    f_cols, g_cols = _columns(F), _columns(G)
    f_codeg, g_codeg = _codegrees(f_cols), _codegrees(g_cols)
    f_inv = _element_invariants(f_cols, f_codeg)
    g_inv = _element_invariants(g_cols, g_codeg)
    if sorted(f_inv) != sorted(g_inv):
        return False, None
    if _intersection_profile(F) != _intersection_profile(G):
        return False, None

    candidates = [
        [y for y in range(n) if g_inv[y] == f_inv[x]] for x in range(n)
    ]
    order = sorted(range(n), key=lambda x: (len(candidates[x]), x))
    images = [-1] * n
    m = len(F)

    def extend(depth, used, f_img, g_res) -> bool:
        if depth == n:
            return True
        x = order[depth]
        for y in candidates[x]:
            if used >> y & 1:
                continue

            # co-degrees with everything already placed must agree
            if any(
                f_codeg[x][order[d]] != g_codeg[y][images[order[d]]]
                for d in range(depth)
            ):
                continue

            bit = 1 << y
            new_f = list(f_img)
            for j in iter_bits(f_cols[x]):
                new_f[j] |= bit
            new_g = list(g_res)
            for j in iter_bits(g_cols[y]):
                new_g[j] |= bit
            if Counter(new_f) != Counter(new_g):
                continue

            images[x] = y
            if extend(depth + 1, used | bit, new_f, new_g):
                return True
            images[x] = -1
        return False

    if not extend(0, 0, [0] * m, [0] * m):
        return False, None
    return True, tuple(y + 1 for y in images)
