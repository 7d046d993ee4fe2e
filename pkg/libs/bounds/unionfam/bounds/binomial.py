from scipy.special import comb

from unionfam.setfam.exceptions import BadParameters


def binomial(n: int, k: int) -> int:
    """
    Exact binomial coefficient. Out-of-range arguments
    (k < 0, k > n or n < 0) give 0, so the bound formulas
    need no special cases when a term vanishes.
    """
    if n < 0 or k < 0 or k > n:
        return 0
    return int(comb(n, k, exact=True))


def anchor_width(k: int, s: int, beta: int) -> int:
    """
    Largest possible number of elements lying in at least
    `beta + 1` of `s + beta` distinct k-sets, floor((s+beta)k/(beta+1)).
    """
    return (s + beta) * k // (beta + 1)


def width_plateau(k: int, s: int, beta: int) -> int:
    """
    Largest `beta'` for which `anchor_width(k, s, beta')` still
    equals `anchor_width(k, s, beta)`. When the width has already
    dropped to `k` the plateau never ends, and `beta` itself is
    returned.
    """
    if k < 1 or s < 1 or beta < 0:
        raise BadParameters(
            "Need k, s >= 1 and beta >= 0, got k={}, s={}, beta={}".format(
                k, s, beta
            )
        )
    width = anchor_width(k, s, beta)
    if width == k:
        return beta

    # width is nonincreasing in beta and reaches k, so this stops
    end = beta
    while anchor_width(k, s, end + 1) == width:
        end += 1
    return end
