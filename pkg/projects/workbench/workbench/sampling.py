from typing import Optional

import numpy as np

from unionfam.bounds import binomial
from unionfam.kneser import build_graph, contains_complete_multipartite
from unionfam.search import ConstraintSpec
from unionfam.setfam import BadParameters, Family, KSet


def _repair(F: Family, spec: ConstraintSpec) -> Family:
    avoid = {KSet(F.n, s) for s in spec.must_avoid}
    F = Family(F.n, F.k, tuple(s for s in F if s not in avoid))
    if spec.pattern is None:
        return F

    while True:
        witness = contains_complete_multipartite(build_graph(F), spec.pattern)
        if witness is None:
            return F
        drop = max(witness.vertices)
        F = F.subfamily(i for i in range(len(F)) if i != drop)


def random_family(
    n: int,
    k: int,
    size: int,
    seed: int,
    repair: Optional[ConstraintSpec] = None,
) -> Family:
    """
    Draw `size` distinct k-sets of [n] uniformly with a seeded
    generator.

    Args:
        n: Size of the ground set
        k: Size of the member sets
        size: Number of sets to draw
        seed: Seed for `numpy.random.default_rng`
        repair:
            Constraints to restore after drawing. Members named in
            `must_avoid` are dropped, then the largest-index member
            of each forbidden pattern found is removed until none
            is left. Repaired families are no longer uniform.

    Raises:
        BadParameters:
            If `size` is out of range, or `repair` asks for a
            removal minimum or required sets, which removing
            members can't restore
    """
    total = binomial(n, k)
    if not 1 <= k <= n or not 0 <= size <= total:
        raise BadParameters(
            "Can't draw {} distinct {}-sets of [{}]".format(size, k, n)
        )
    if repair is not None and (repair.removal_min or repair.must_contain):
        raise BadParameters(
            "Only forbidden patterns and avoided sets can be repaired"
        )

    rng = np.random.default_rng(seed)
    chosen = np.sort(rng.choice(total, size=size, replace=False))
    everything = Family.complete(n, k)
    F = everything.subfamily(int(i) for i in chosen)
    if repair is not None:
        F = _repair(F, repair)
    return F
