"""
Cross-checks between the generators and the closed-form sizes:
every generated family is enumerated and its size compared
with the formula it is supposed to attain, along with a few
identities between the formulas themselves.
"""

import logging
from dataclasses import dataclass
from typing import Callable, Dict, Optional, Sequence

from unionfam.bounds import (
    BoundQuery,
    BoundValue,
    anchor_width,
    binomial,
    evaluate_bound,
)
from unionfam.constructions.families import (
    block_family,
    hilton_milner,
    hilton_milner_triangle,
    interval_family,
    spine_family,
    star,
)
from unionfam.constructions.restricted import (
    layered_spine_family,
    padded_spine_family,
)
from unionfam.report import CheckLedger
from unionfam.setfam import Infeasible, TheoremViolation, is_isomorphic

Override = Callable[[BoundQuery], BoundValue]

# (s, beta) pairs for the restricted star bound ordering
RESTRICTED_WIDTHS = ((1, 0), (1, 1), (1, 2), (2, 0), (2, 1))


@dataclass(frozen=True)
class ConsistencyGrid:
    ns: Sequence[int] = tuple(range(10, 15))
    ks: Sequence[int] = (3, 4, 5)
    ts: Sequence[int] = (1, 2, 3)
    identity_ns: Sequence[int] = tuple(range(10, 21))


class _Checker:
    def __init__(self, overrides: Optional[Dict[str, Override]]):
        self.overrides = overrides or {}
        self.ledger = CheckLedger()

    def bound(self, name: str, **params) -> BoundValue:
        query = BoundQuery(name, **params)
        if name in self.overrides:
            return self.overrides[name](query)
        return evaluate_bound(query)

    def add(self, check_id, claim, params, expected, actual):
        self.ledger.add(check_id, claim, params, expected, actual)

    def sizes(self, n: int, k: int, ts: Sequence[int]) -> None:
        params = {"n": n, "k": k}
        hm = len(hilton_milner(n, k))
        self.add(
            "hilton-milner-size",
            "the Hilton-Milner family has the closed-form size",
            params,
            self.bound("hilton-milner-size", n=n, k=k),
            hm,
        )

        triangle = len(hilton_milner_triangle(n, k))
        if k <= 3 or n == 2 * k:
            self.add(
                "hilton-milner-triangle",
                "for k <= 3, or n = 2k, the triangle family is as "
                "large as the Hilton-Milner family",
                params,
                hm,
                triangle,
            )
        else:
            self.add(
                "hilton-milner-triangle",
                "for k >= 4 and n > 2k the Hilton-Milner family is "
                "larger than the triangle family",
                params,
                True,
                hm > triangle,
            )

        self.add(
            "spine-is-star",
            "the spine family with a one-element head is the star",
            params,
            True,
            spine_family(n, k, 0) == star(n, k),
        )
        self.add(
            "spine-is-hilton-milner",
            "the spine family with a two-element head is "
            "isomorphic to the Hilton-Milner family",
            params,
            True,
            is_isomorphic(spine_family(n, k, 1), hilton_milner(n, k))[0],
        )

        for i in range(k):
            spine = spine_family(n, k, i)
            size = self.bound("spine-size", n=n, k=k, i=i)
            self.add(
                "spine-size",
                "the spine family has the closed-form size",
                {**params, "i": i},
                size,
                len(spine),
            )
            for t in ts:
                self.padded(n, k, i, t, spine, size)

        for i in range(1, k + 1):
            self.add(
                "interval-family-size",
                "the interval family has the closed-form size",
                {**params, "i": i},
                self.bound("interval-family", n=n, k=k, i=i),
                len(interval_family(n, k, i)),
            )

        for i in range(1, k):
            self.add(
                "telescoping",
                "consecutive core sizes differ by one binomial",
                {**params, "i": i},
                binomial(n - k - i, k - i),
                self.bound("core-size", n=n, k=k, i=i - 1)
                - self.bound("core-size", n=n, k=k, i=i),
            )

    def padded(self, n, k, i, t, spine, size) -> None:
        params = {"n": n, "k": k, "i": i, "t": t}
        claim = "padding adds t - 1 sets per point of the head"
        try:
            padded = padded_spine_family(n, k, i, t)
        except Infeasible as e:
            self.ledger.skip(
                "padded-spine-size", claim, params, size + i * (t - 1), str(e)
            )
            return

        self.add(
            "padded-spine-size", claim, params, size + i * (t - 1), len(padded)
        )
        if t == 1:
            self.add(
                "padded-spine-at-one",
                "padding with t = 1 leaves the spine family unchanged",
                params,
                True,
                padded == spine,
            )

        # layered construction over the stars at 1 and 2
        if not (k >= 5 and 1 <= i <= k - 2):
            return
        params = {**params, "r": 2}
        claim = (
            "the completed layered spine family attains the "
            "multipartite bound with a singleton part"
        )
        expected = self.bound(
            "multipartite-removal-single",
            n=n,
            k=k,
            sizes=[t, t, 1],
            gamma=i,
        )
        try:
            layered = layered_spine_family(n, k, i, t, 2)
        except Infeasible as e:
            self.ledger.skip(
                "layered-spine-size", claim, params, expected, str(e)
            )
            return
        self.add("layered-spine-size", claim, params, expected, len(layered))

    def blocks(self, n: int, k: int, ts: Sequence[int]) -> None:
        claim = "the block family attains the union block bound"
        for t in ts:
            for s in range(1, t + 1):
                params = {"n": n, "k": k, "s": s, "t": t}
                if s * k + 1 > n:
                    continue
                expected = self.bound("union-block", n=n, k=k, s=s, t=t)
                try:
                    F = block_family(n, k, s, t)
                except Infeasible as e:
                    self.ledger.skip(
                        "block-family-size", claim, params, expected, str(e)
                    )
                    continue
                self.add("block-family-size", claim, params, expected, len(F))

    def identities(self, n: int, k: int, ts: Sequence[int]) -> None:
        params = {"n": n, "k": k}
        self.add(
            "removal-degenerates-to-hilton-milner",
            "with s = t = 1 and beta = 0 the removal bound is the "
            "Hilton-Milner bound",
            params,
            self.bound("hilton-milner-size", n=n, k=k),
            self.bound("union-removal", n=n, k=k, s=1, t=1, beta=0),
        )

        for t in ts:
            self.add(
                "removal-at-one-is-nonstar",
                "with s = 1 and beta = 0 the removal bound is the "
                "non-star (1,t)-union bound",
                {**params, "t": t},
                self.bound("union-nonstar", n=n, k=k, t=t),
                self.bound("union-removal", n=n, k=k, s=1, t=t, beta=0),
            )

        gammas = range(1, k - 1) if k >= 5 else range(0)
        for gamma in gammas:
            self.add(
                "single-removal-at-one",
                "with t = 1 the single-part removal bound is the "
                "core size plus gamma",
                {**params, "gamma": gamma},
                self.bound("core-size", n=n, k=k, i=gamma) + gamma,
                self.bound(
                    "union-removal-single", n=n, k=k, t=1, gamma=gamma
                ),
            )

        for s, beta in RESTRICTED_WIDTHS:
            upper = self.bound("restricted-star", n=n, k=k, s=s, beta=beta)
            for width in range(anchor_width(k, s, beta) + 1):
                lower = self.bound(
                    "restricted-star-lower", n=n, k=k, width=width
                )
                self.add(
                    "restricted-star-bounds-ordered",
                    "the restricted star upper bound is at least the "
                    "lower bound for every heavy set size up to the "
                    "anchor width",
                    {**params, "s": s, "beta": beta, "width": width},
                    True,
                    upper >= lower,
                )

        s = k - 2
        claim = "both branches of the general bound agree at k = s + 2"
        if s < 1 or 2 * k > n:
            return
        try:
            result = self.bound("hilton-milner-general", n=n, k=k, s=s)
        except TheoremViolation as e:
            self.ledger.add(
                "general-bound-agreement",
                claim,
                {**params, "s": s},
                True,
                False,
                reason=str(e),
            )
            return
        self.add(
            "general-bound-agreement",
            claim,
            {**params, "s": s},
            result.first,
            result.second,
        )


def consistency_matrix(
    grid: Optional[ConsistencyGrid] = None,
    overrides: Optional[Dict[str, Override]] = None,
) -> CheckLedger:
    """
    Enumerate every generator over `grid` and compare sizes
    against the closed forms.

    Args:
        grid: Parameter ranges to cover
        overrides:
            Replacement evaluators for named bounds, used to
            check that a corrupted formula is caught.

    Returns:
        One record per comparison
    """
    grid = grid or ConsistencyGrid()
    checker = _Checker(overrides)
    for n in grid.ns:
        for k in grid.ks:
            if 2 * k > n:
                continue
            logging.debug("Checking constructions at n=%d, k=%d", n, k)
            checker.sizes(n, k, grid.ts)
            checker.blocks(n, k, grid.ts)

    for n in grid.identity_ns:
        for k in grid.ks:
            if 2 * k <= n:
                checker.identities(n, k, grid.ts)

    counts = checker.ledger.counts
    logging.info(
        "Consistency checks: %d passed, %d failed, %d skipped",
        counts["pass"],
        counts["fail"],
        counts["skipped"],
    )
    return checker.ledger
