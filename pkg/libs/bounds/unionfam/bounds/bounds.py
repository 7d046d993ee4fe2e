"""
Closed-form size bounds and family sizes, evaluated exactly.

Every bound is registered under a string id together with the
parameters it needs and a one-line statement of what it bounds.
`evaluate_bound` looks the id up, checks that the query carries
those parameters and that they lie in the range the statement is
proved for, and returns the exact integer value.
"""

from dataclasses import asdict, dataclass
from typing import Callable, Dict, List, Optional, Tuple, Union

from unionfam.bounds.binomial import anchor_width, binomial, width_plateau
from unionfam.setfam.exceptions import BadParameters, TheoremViolation


@dataclass(frozen=True)
class BoundQuery:
    bound: str
    n: Optional[int] = None
    k: Optional[int] = None
    s: Optional[int] = None
    t: Optional[int] = None
    beta: Optional[int] = None
    gamma: Optional[int] = None
    r: Optional[int] = None
    sizes: Optional[Tuple[int, ...]] = None
    i: Optional[int] = None
    chi: Optional[int] = None
    eta: Optional[int] = None
    ell: Optional[int] = None
    l: Optional[int] = None  # noqa: E741
    width: Optional[int] = None

    def __post_init__(self):
        if self.sizes is not None:
            object.__setattr__(self, "sizes", tuple(self.sizes))

    def parameters(self) -> Dict[str, object]:
        """The parameters that were actually set"""
        params = asdict(self)
        params.pop("bound")
        if params["sizes"] is not None:
            params["sizes"] = list(params["sizes"])
        return {key: val for key, val in params.items() if val is not None}


@dataclass(frozen=True)
class GeneralBound:
    """
    Both branches of the nontrivial intersecting family bound
    whose conditions depend on how k compares to s. The branch
    conditions overlap at k = s + 2, where the two values agree.
    """

    first: int
    second: int
    first_applies: bool
    second_applies: bool

    @property
    def value(self) -> int:
        return self.first if self.first_applies else self.second


BoundValue = Union[int, GeneralBound]


@dataclass(frozen=True)
class BoundInfo:
    name: str
    params: Tuple[str, ...]
    claim: str


@dataclass(frozen=True)
class _Entry:
    info: BoundInfo
    fn: Callable[..., BoundValue]


_REGISTRY: Dict[str, _Entry] = {}


def _bound(name: str, *params: str, claim: str):
    def wrapper(fn):
        _REGISTRY[name] = _Entry(BoundInfo(name, params, claim), fn)
        return fn

    return wrapper


def _check(condition: bool, name: str, requirement: str, **values) -> None:
    if not condition:
        given = ", ".join(f"{key}={value}" for key, value in values.items())
        raise BadParameters(f"Bound '{name}' needs {requirement}, got {given}")


def _check_sizes(name: str, sizes: Tuple[int, ...], smallest: int) -> None:
    _check(len(sizes) >= 2, name, "at least two part sizes", sizes=sizes)
    _check(
        all(a >= b for a, b in zip(sizes, sizes[1:])),
        name,
        "nonincreasing part sizes",
        sizes=sizes,
    )
    _check(
        sizes[-1] >= smallest,
        name,
        f"every part size >= {smallest}",
        sizes=sizes,
    )


# size formulas shared with the family generators


def hilton_milner_size(n: int, k: int) -> int:
    return binomial(n - 1, k - 1) - binomial(n - k - 1, k - 1) + 1


def core_size(n: int, k: int, i: int) -> int:
    """
    Sets through 1 that meet a fixed (k-1)-set E, plus the sets
    that contain a fixed (i+1)-set J through 1 and avoid E.
    """
    return (
        binomial(n - 1, k - 1)
        - binomial(n - k, k - 1)
        + binomial(n - k - i, k - i - 1)
    )


def spine_size(n: int, k: int, i: int) -> int:
    return core_size(n, k, i) + i


def interval_size(n: int, k: int, i: int) -> int:
    heads = 1 if i == 1 else 2
    return heads + binomial(n - k - i, k - 1)


def restricted_star_size(n: int, k: int, width: int) -> int:
    return binomial(n - 1, k - 1) - binomial(n - width - 1, k - 1)


# registered bounds


@_bound(
    "ekr",
    "n",
    "k",
    claim="intersecting families have at most C(n-1,k-1) sets",
)
def _ekr(n, k):
    _check(1 <= k and 2 * k <= n, "ekr", "1 <= k and n >= 2k", n=n, k=k)
    return binomial(n - 1, k - 1)


@_bound(
    "hilton-milner",
    "n",
    "k",
    claim="nontrivial intersecting families have at most "
    "C(n-1,k-1)-C(n-k-1,k-1)+1 sets",
)
def _hilton_milner(n, k):
    _check(
        2 <= k and 2 * k < n, "hilton-milner", "2 <= k, n > 2k", n=n, k=k
    )
    return hilton_milner_size(n, k)


@_bound(
    "hilton-milner-size",
    "n",
    "k",
    claim="the Hilton-Milner family has C(n-1,k-1)-C(n-k-1,k-1)+1 sets",
)
def _hilton_milner_size(n, k):
    _check(1 <= k < n, "hilton-milner-size", "1 <= k < n", n=n, k=k)
    return hilton_milner_size(n, k)


@_bound(
    "hilton-milner-general",
    "n",
    "k",
    "s",
    claim=(
        "intersecting families whose large subfamilies have empty "
        "intersection obey the two-branch bound"
    ),
)
def _hilton_milner_general(n, k, s):
    name = "hilton-milner-general"
    _check(s >= 1, name, "s >= 1", s=s)
    _check(
        min(3, s) <= k and 2 * k <= n,
        name,
        "min(3, s) <= k <= n/2",
        n=n,
        k=k,
        s=s,
    )
    base = binomial(n - 1, k - 1) - binomial(n - k, k - 1)
    first = base + n - k
    second = base + binomial(n - k - s, k - s - 1) + s
    result = GeneralBound(
        first=first,
        second=second,
        first_applies=2 < k <= s + 2,
        second_applies=k <= 2 or k >= s + 2,
    )
    if result.first_applies and result.second_applies and first != second:
        raise TheoremViolation(
            "Branches disagree at n={}, k={}, s={}: {} != {}".format(
                n, k, s, first, second
            )
        )
    return result


@_bound(
    "third-intersecting",
    "n",
    "k",
    claim="intersecting families that are neither stars nor Hilton-Milner "
    "type are no larger than the spine family with i=2",
)
def _third_intersecting(n, k):
    _check(
        3 <= k and 2 * k < n, "third-intersecting", "3 <= k < n/2", n=n, k=k
    )
    return spine_size(n, k, 2)


@_bound(
    "interval-family",
    "n",
    "k",
    "i",
    claim="the two-interval family with a star tail has the stated size",
)
def _interval_family(n, k, i):
    _check(1 <= i <= k, "interval-family", "1 <= i <= k", k=k, i=i)
    _check(k + i <= n, "interval-family", "n >= k + i", n=n, k=k, i=i)
    return interval_size(n, k, i)


@_bound(
    "union-block",
    "n",
    "k",
    "s",
    "t",
    claim="(s,t)-union intersecting families with removal number >= s "
    "have at most C(n-1,k-1)-C(n-sk-1,k-1)+s+t-1 sets",
)
def _union_block(n, k, s, t):
    _check(1 <= s <= t, "union-block", "1 <= s <= t", s=s, t=t)
    _check(
        1 <= k and s * k + 1 <= n, "union-block", "n >= sk + 1", n=n, k=k, s=s
    )
    return (
        binomial(n - 1, k - 1) - binomial(n - s * k - 1, k - 1) + s + t - 1
    )


@_bound(
    "forbidden-chromatic",
    "n",
    "k",
    "chi",
    "eta",
    claim="families avoiding a graph with chromatic number chi and "
    "smallest colour class eta obey the star-union bound",
)
def _forbidden_chromatic(n, k, chi, eta):
    name = "forbidden-chromatic"
    _check(2 <= k <= n, name, "2 <= k <= n", n=n, k=k)
    _check(chi >= 2 and eta >= 1, name, "chi >= 2, eta >= 1", chi=chi, eta=eta)
    return binomial(n, k) - binomial(n - chi + 1, k) + eta - 1


@_bound(
    "multipartite",
    "n",
    "k",
    "sizes",
    claim="complete multipartite free families with large removal "
    "number obey the (r+1)-partite bound",
)
def _multipartite(n, k, sizes):
    _check(2 <= k <= n, "multipartite", "2 <= k <= n", n=n, k=k)
    _check_sizes("multipartite", sizes, 2)
    r = len(sizes) - 1
    s_r, s_last = sizes[-2], sizes[-1]
    return (
        binomial(n, k)
        - binomial(n - r, k)
        - binomial(n - s_last * k - r, k - 1)
        + s_r
        + s_last
        - 1
    )


@_bound(
    "union-removal",
    "n",
    "k",
    "s",
    "t",
    "beta",
    claim="(s,t)-union intersecting families with removal number >= "
    "s+beta obey the anchor-width bound",
)
def _union_removal(n, k, s, t, beta):
    name = "union-removal"
    _check(3 <= k <= n, name, "3 <= k <= n", n=n, k=k)
    _check(1 <= s <= t, name, "1 <= s <= t", s=s, t=t)
    _check(beta >= 0, name, "beta >= 0", beta=beta)
    width = anchor_width(k, s, beta)
    plateau = width_plateau(k, s, beta)
    return (
        binomial(n - 1, k - 1)
        - binomial(n - width - 1, k - 1)
        + s
        + t
        + plateau
        - 1
    )


@_bound(
    "union-nonstar",
    "n",
    "k",
    "t",
    claim="(1,t)-union intersecting families outside every star have at "
    "most C(n-1,k-1)-C(n-k-1,k-1)+t sets",
)
def _union_nonstar(n, k, t):
    _check(3 <= k <= n, "union-nonstar", "3 <= k <= n", n=n, k=k)
    _check(t >= 1, "union-nonstar", "t >= 1", t=t)
    return binomial(n - 1, k - 1) - binomial(n - k - 1, k - 1) + t


@_bound(
    "union-removal-single",
    "n",
    "k",
    "t",
    "gamma",
    claim="(1,t)-union intersecting families with removal number >= "
    "gamma have at most core-size(gamma) + gamma*t sets",
)
def _union_removal_single(n, k, t, gamma):
    name = "union-removal-single"
    _check(5 <= k <= n, name, "5 <= k <= n", n=n, k=k)
    _check(t >= 1, name, "t >= 1", t=t)
    _check(1 <= gamma <= k - 2, name, "1 <= gamma <= k - 2", k=k, gamma=gamma)
    return core_size(n, k, gamma) + gamma * t


@_bound(
    "multipartite-removal",
    "n",
    "k",
    "sizes",
    "beta",
    claim="complete multipartite free families with removal number >= "
    "s_last+beta obey the anchor-width bound",
)
def _multipartite_removal(n, k, sizes, beta):
    name = "multipartite-removal"
    _check(3 <= k <= n, name, "3 <= k <= n", n=n, k=k)
    _check_sizes(name, sizes, 1)
    _check(beta >= 0, name, "beta >= 0", beta=beta)
    r = len(sizes) - 1
    s_r, s_last = sizes[-2], sizes[-1]
    width = anchor_width(k, s_last, beta)
    plateau = width_plateau(k, s_last, beta)
    return (
        binomial(n, k)
        - binomial(n - r, k)
        - binomial(n - width - r, k - 1)
        + s_r
        + s_last
        + plateau
        - 1
    )


@_bound(
    "multipartite-removal-single",
    "n",
    "k",
    "sizes",
    "gamma",
    claim="families free of a complete multipartite graph with a "
    "singleton part and removal number >= gamma obey the layered bound",
)
def _multipartite_removal_single(n, k, sizes, gamma):
    name = "multipartite-removal-single"
    _check(5 <= k <= n, name, "5 <= k <= n", n=n, k=k)
    _check_sizes(name, sizes, 1)
    _check(sizes[-1] == 1, name, "a last part of size 1", sizes=sizes)
    _check(1 <= gamma <= k - 2, name, "1 <= gamma <= k - 2", k=k, gamma=gamma)
    r = len(sizes) - 1

    # the extra-set term is taken per part of size sizes[-2]
    t = sizes[-2]
    return (
        binomial(n, k)
        - binomial(n - r, k)
        - binomial(n - k - r + 1, k - 1)
        + binomial(n - k - r - gamma + 1, k - gamma - 1)
        + gamma * t
    )


@_bound(
    "anchored-union",
    "n",
    "k",
    "s",
    "t",
    claim="star subfamilies plus s+1 anchors that stay (s,t)-union "
    "intersecting obey the half-width bound",
)
def _anchored_union(n, k, s, t):
    _check(1 <= k <= n, "anchored-union", "1 <= k <= n", n=n, k=k)
    _check(1 <= s <= t, "anchored-union", "1 <= s <= t", s=s, t=t)
    width = (s + 1) * k // 2
    return (
        binomial(n - 1, k - 1) - binomial(n - width - 1, k - 1) + (s + 1) * t
    )


@_bound(
    "restricted-star-lower",
    "n",
    "k",
    "width",
    claim="restricted stars contain every star set meeting the heavy set",
)
def _restricted_star_lower(n, k, width):
    name = "restricted-star-lower"
    _check(1 <= k <= n, name, "1 <= k <= n", n=n, k=k)
    _check(0 <= width < n, name, "0 <= width < n", n=n, width=width)
    return restricted_star_size(n, k, width)


@_bound(
    "restricted-star",
    "n",
    "k",
    "s",
    "beta",
    claim="restricted stars have at most C(n-1,k-1)-C(n-w-1,k-1) sets",
)
def _restricted_star(n, k, s, beta):
    name = "restricted-star"
    _check(1 <= k <= n, name, "1 <= k <= n", n=n, k=k)
    _check(s >= 1 and beta >= 0, name, "s >= 1, beta >= 0", s=s, beta=beta)
    return restricted_star_size(n, k, anchor_width(k, s, beta))


@_bound(
    "restricted-star-single",
    "n",
    "k",
    "beta",
    claim="stars restricted to meet all of 1+beta anchors are no larger "
    "than when the anchors share k-1 elements",
)
def _restricted_star_single(n, k, beta):
    name = "restricted-star-single"
    _check(1 <= k <= n, name, "1 <= k <= n", n=n, k=k)
    _check(beta >= 0, name, "beta >= 0", beta=beta)
    return (
        binomial(n - 1, k - 1)
        - binomial(n - k, k - 1)
        + binomial(n - k - beta - 1, k - beta - 2)
    )


@_bound(
    "disjoint-pairs",
    "k",
    "ell",
    claim="a family with removal number ell has at least "
    "ell^2/(2*C(2k,k)) disjoint pairs",
)
def _disjoint_pairs(k, ell):
    _check(
        k >= 1 and ell >= 0,
        "disjoint-pairs",
        "k >= 1, ell >= 0",
        k=k,
        ell=ell,
    )
    denominator = 2 * binomial(2 * k, k)
    return -(-ell * ell // denominator)


@_bound(
    "skew-pairs",
    "k",
    "l",
    claim="skew cross-intersecting set pair systems have at most "
    "C(k+l,k) pairs",
)
def _skew_pairs(k, l):  # noqa: E741
    _check(k >= 0 and l >= 0, "skew-pairs", "k, l >= 0", k=k, l=l)
    return binomial(k + l, k)


@_bound(
    "core-size",
    "n",
    "k",
    "i",
    claim="star sets meeting a (k-1)-set plus the sets containing an "
    "(i+1)-set through 1 number C(n-1,k-1)-C(n-k,k-1)+C(n-k-i,k-i-1)",
)
def _core_size(n, k, i):
    _check(1 <= k <= n, "core-size", "1 <= k <= n", n=n, k=k)
    _check(0 <= i <= k, "core-size", "0 <= i <= k", k=k, i=i)
    return core_size(n, k, i)


@_bound(
    "spine-size",
    "n",
    "k",
    "i",
    claim="the spine family with an (i+1)-set head has core-size + i sets",
)
def _spine_size(n, k, i):
    _check(0 <= i <= k, "spine-size", "0 <= i <= k", k=k, i=i)
    _check(1 <= k and k + i <= n, "spine-size", "n >= k + i", n=n, k=k, i=i)
    return spine_size(n, k, i)


def available_bounds() -> List[BoundInfo]:
    return [_REGISTRY[name].info for name in sorted(_REGISTRY)]


def bound_info(name: str) -> BoundInfo:
    try:
        return _REGISTRY[name].info
    except KeyError:
        raise BadParameters(
            "Unknown bound '{}', choose from {}".format(
                name, ", ".join(sorted(_REGISTRY))
            )
        ) from None


def evaluate_bound(query: BoundQuery) -> BoundValue:
    """
    Evaluate a registered bound exactly.

    Args:
        query:
            The bound id and its parameters. Parameters the
            bound doesn't use are ignored.

    Returns:
        The exact bound. The two-branch intersecting family
        bound returns a `GeneralBound`, every other id an `int`.

    Raises:
        BadParameters:
            If the id is unknown, a required parameter is
            missing, or a parameter is outside the range the
            bound is stated for.
    """
    info = bound_info(query.bound)
    missing = [p for p in info.params if getattr(query, p) is None]
    if missing:
        raise BadParameters(
            "Bound '{}' needs parameter(s) {}".format(
                query.bound, ", ".join(missing)
            )
        )
    kwargs = {p: getattr(query, p) for p in info.params}
    return _REGISTRY[query.bound].fn(**kwargs)
