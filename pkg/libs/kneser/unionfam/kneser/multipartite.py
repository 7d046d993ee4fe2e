"""
Exact detection of complete multipartite subgraphs in disjointness
graphs. A family is (s,t)-union intersecting exactly when its
disjointness graph has no K_{s,t}, and has no r pairwise disjoint
sets exactly when the graph has no K_r = K_{1,...,1}, so both checks
are a single call into the search here.
"""

import logging
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

from unionfam.bounds import binomial
from unionfam.kneser.graph import DisjointnessGraph, build_graph
from unionfam.setfam import BadParameters, Budget, Family, KSet
from unionfam.setfam.bits import iter_bits, popcount, to_mask


@dataclass(frozen=True)
class ForbiddenWitness:
    """
    A copy of a complete multipartite graph inside a disjointness
    graph, as one tuple of vertex indices per part.
    """

    parts: Tuple[Tuple[int, ...], ...]

    @property
    def vertices(self) -> Tuple[int, ...]:
        return tuple(v for part in self.parts for v in part)

    def sets(self, F: Family) -> Tuple[Tuple[KSet, ...], ...]:
        return tuple(tuple(F[v] for v in part) for part in self.parts)

    def verify(self, G: DisjointnessGraph) -> bool:
        vertices = self.vertices
        if len(set(vertices)) != len(vertices):
            return False
        for p, part in enumerate(self.parts):
            for other in self.parts[p + 1 :]:
                for u in part:
                    for v in other:
                        if not G.has_edge(u, v):
                            return False
        return True

    def to_lists(self) -> List[List[int]]:
        return [list(part) for part in self.parts]


def _check_sizes(sizes: Sequence[int]) -> Tuple[int, ...]:
    sizes = tuple(sizes)
    if not sizes or any(size < 1 for size in sizes):
        raise BadParameters(
            "Part sizes must be a nonempty list of positive "
            "integers, got {}".format(list(sizes))
        )
    return sizes


def contains_complete_multipartite(
    G: DisjointnessGraph,
    sizes: Sequence[int],
    budget: Optional[int] = None,
    within: Optional[Iterable[int]] = None,
    through: Optional[int] = None,
) -> Optional[ForbiddenWitness]:
    """
    Search `G` for a complete multipartite subgraph with the
    given part sizes.

    Parts are filled in the order given, each with an ascending
    combination of vertices, so the witness returned is the one
    whose concatenated vertex tuple is lexicographically smallest.

    Args:
        G: Graph to search
        sizes: Number of vertices in each part
        budget:
            Maximum number of search nodes to visit. `None`
            searches without limit.
        within:
            If given, only these vertices may be used
        through:
            If given, only witnesses that use this vertex
            are considered

    Returns:
        The witness, or `None` if the graph has no such subgraph

    Raises:
        BudgetExceeded: If the search visits more than `budget` nodes
    """
    sizes = _check_sizes(sizes)
    counter = Budget(budget, "multipartite search")
    adjacency = G.adjacency
    alive = (1 << len(G)) - 1
    if within is not None:
        alive &= to_mask(within)
    if through is not None and not alive >> through & 1:
        return None

    total = sum(sizes)
    if popcount(alive) < total:
        return None

    # a vertex in part p is adjacent to every vertex outside part p
    eligible = []
    for size in sizes:
        needed = total - size
        mask = 0
        for v in iter_bits(alive):
            if popcount(adjacency[v] & alive) >= needed:
                mask |= 1 << v
        eligible.append(mask)
    remaining = [sum(sizes[p + 1 :]) for p in range(len(sizes))]

    parts: List[Tuple[int, ...]] = []
    current: List[int] = []

    def search(p: int, pool: int, common: int, last: int, placed: bool):
        counter.tick()
        if len(current) == sizes[p]:
            parts.append(tuple(current))
            if p + 1 == len(sizes):
                if not placed:
                    parts.pop()
                    return None
                return ForbiddenWitness(tuple(parts))

            # swapping two equal parts gives the same subgraph, so
            # the next part may start after this one's first vertex
            start = current[0] if sizes[p + 1] == sizes[p] else -1
            saved = current[:]
            current.clear()
            result = search(p + 1, common, common, start, placed)
            current.extend(saved)
            if result is None:
                parts.pop()
            return result

        need_here = sizes[p] - len(current)
        need_later = remaining[p]
        candidates = pool & eligible[p] & ~((1 << (last + 1)) - 1)
        if popcount(candidates) < need_here:
            return None
        if not placed:
            later = need_later and common >> through & 1
            if not (later or candidates >> through & 1):
                return None

        for v in iter_bits(candidates):
            # not enough larger candidates left to finish the part
            if popcount(candidates >> v) < need_here:
                break
            next_common = common & adjacency[v]
            if need_later and popcount(next_common) < need_later:
                continue

            current.append(v)
            result = search(p, pool, next_common, v, placed or v == through)
            current.pop()
            if result is not None:
                return result
        return None

    witness = search(0, alive, alive, -1, through is None)
    logging.debug(
        "Multipartite search for %s visited %d nodes, %s",
        list(sizes),
        counter.nodes,
        "found a witness" if witness else "found none",
    )
    return witness


def is_union_intersecting(
    F: Family, s: int, t: int, budget: Optional[int] = None
) -> Tuple[bool, Optional[ForbiddenWitness]]:
    """
    Check that no `s` members of `F` have a union disjoint from
    the union of `t` other members.

    Returns:
        `(True, None)` when `F` is (s,t)-union intersecting, else
        `(False, witness)` with the violating sets as a K_{s,t}
    """
    if not 1 <= s <= t:
        raise BadParameters(f"Need 1 <= s <= t, got s={s}, t={t}")
    witness = contains_complete_multipartite(build_graph(F), [s, t], budget)
    return witness is None, witness


def has_r_pairwise_disjoint(
    F: Family, r: int, budget: Optional[int] = None
) -> bool:
    if r < 1:
        raise BadParameters(f"Need r >= 1, got {r}")
    if r == 1:
        return len(F) > 0
    G = build_graph(F)
    return contains_complete_multipartite(G, [1] * r, budget) is not None


def star_count_bound_holds(G: DisjointnessGraph, s: int, t: int) -> bool:
    """
    Check the star-counting inequality every K_{s,t}-free graph
    satisfies: each s-set of vertices has at most t - 1 common
    neighbours, so the number of (vertex, s-subset of its
    neighbourhood) pairs is at most (t - 1) C(|V|, s).
    """
    if not 1 <= s <= t:
        raise BadParameters(f"Need 1 <= s <= t, got s={s}, t={t}")
    stars = sum(binomial(G.degree(v), s) for v in range(len(G)))
    return stars <= (t - 1) * binomial(len(G), s)
