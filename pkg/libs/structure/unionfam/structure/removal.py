"""
Exact removal numbers: the fewest members of a family whose
removal leaves no r pairwise disjoint sets. That is a minimum
vertex cover of the disjointness graph for r = 2, and a minimum
hitting set of its r-cliques in general.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

from unionfam.bounds import binomial
from unionfam.kneser import DisjointnessGraph, build_graph
from unionfam.setfam import BadParameters, Budget, EmptyFamily, Family
from unionfam.setfam.bits import iter_bits, lowest, popcount


@dataclass(frozen=True)
class Removal:
    """
    `value` is the removal number and `removed` one optimal set
    of members to remove, so `len(removed) == value`.
    """

    value: int
    removed: Family


class _VertexCoverSearch:
    def __init__(self, G: DisjointnessGraph, counter: Budget):
        self.adjacency = G.adjacency
        self.counter = counter
        everything = (1 << len(G)) - 1
        self.best = everything
        self.best_count = len(G)

    def _reduce(self, alive: int, chosen: int) -> Tuple[int, int]:
        adjacency = self.adjacency
        changed = True
        while changed:
            changed = False
            for v in iter_bits(alive):
                if not alive >> v & 1:
                    continue
                neighbours = adjacency[v] & alive
                degree = popcount(neighbours)
                if degree == 0:
                    alive &= ~(1 << v)
                    changed = True
                elif degree == 1:
                    # some optimal cover takes the neighbour
                    u = lowest(neighbours)
                    chosen |= 1 << u
                    alive &= ~((1 << u) | (1 << v))
                    changed = True
        return alive, chosen

    def _matching_bound(self, alive: int) -> int:
        size = 0
        while alive:
            v = lowest(alive)
            alive &= ~(1 << v)
            neighbours = self.adjacency[v] & alive
            if neighbours:
                alive &= ~(1 << lowest(neighbours))
                size += 1
        return size

    def search(self, alive: int, chosen: int) -> None:
        self.counter.tick()
        alive, chosen = self._reduce(alive, chosen)
        count = popcount(chosen)
        if count >= self.best_count:
            return
        if not alive:
            self.best, self.best_count = chosen, count
            return
        if count + self._matching_bound(alive) >= self.best_count:
            return

        v = max(
            iter_bits(alive),
            key=lambda x: (popcount(self.adjacency[x] & alive), -x),
        )
        neighbours = self.adjacency[v] & alive
        self.search(alive & ~(1 << v), chosen | (1 << v))
        self.search(alive & ~neighbours & ~(1 << v), chosen | neighbours)


def _cliques(G: DisjointnessGraph, r: int, counter: Budget) -> List[int]:
    adjacency = G.adjacency
    found = []

    def extend(clique: int, candidates: int, size: int):
        counter.tick()
        if size == r:
            found.append(clique)
            return
        for v in iter_bits(candidates):
            extend(
                clique | (1 << v),
                candidates & adjacency[v] & ~((2 << v) - 1),
                size + 1,
            )

    extend(0, (1 << len(G)) - 1, 0)
    return found


class _HittingSetSearch:
    def __init__(self, cliques: List[int], size: int, counter: Budget):
        self.cliques = cliques
        self.counter = counter
        self.best = (1 << size) - 1
        self.best_count = size

    def _packing_bound(self, uncovered: List[int]) -> int:
        used, size = 0, 0
        for clique in uncovered:
            if not clique & used:
                used |= clique
                size += 1
        return size

    def search(self, chosen: int, forbidden: int) -> None:
        self.counter.tick()
        count = popcount(chosen)
        if count >= self.best_count:
            return

        uncovered = [c for c in self.cliques if not c & chosen]
        if not uncovered:
            self.best, self.best_count = chosen, count
            return
        if count + self._packing_bound(uncovered) >= self.best_count:
            return

        target = min(uncovered, key=lambda c: popcount(c & ~forbidden))
        free = target & ~forbidden
        if not free:
            return

        # take the free vertices of the clique in turn, forbidding
        # the ones already tried so branches never overlap
        for v in iter_bits(free):
            self.search(chosen | (1 << v), forbidden)
            forbidden |= 1 << v


def removal_number(
    F: Family, r: int = 2, budget: Optional[int] = None
) -> Removal:
    """
    Compute the r-removal number of `F` exactly.

    Args:
        F: Family to measure
        r: Size of the pairwise disjoint collections to destroy
        budget: Maximum search nodes, or `None` for no limit

    Returns:
        The removal number together with an optimal set to remove

    Raises:
        BudgetExceeded:
            If the search can't prove optimality within `budget`
    """
    if r < 2:
        raise BadParameters(f"Need r >= 2, got {r}")

    counter = Budget(budget, "removal number search")
    G = build_graph(F)
    if r == 2:
        search = _VertexCoverSearch(G, counter)
        search.search((1 << len(G)) - 1, 0)
    else:
        cliques = _cliques(G, r, counter)
        search = _HittingSetSearch(cliques, len(G), counter)
        search.search(0, 0)

    logging.debug(
        "Removal number %d for r=%d on %d sets after %d nodes",
        search.best_count,
        r,
        len(F),
        counter.nodes,
    )
    removed = F.subfamily(iter_bits(search.best))
    return Removal(search.best_count, removed)


def is_intersecting(F: Family) -> bool:
    return build_graph(F).edge_count == 0


def max_element_degree(F: Family) -> Tuple[int, int]:
    """
    The element lying in the most members of `F` and how many
    members contain it. Ties go to the smallest element.
    """
    if not len(F):
        raise EmptyFamily("Maximum degree of an empty family is undefined")
    degrees = F.degrees()
    best = max(range(F.n), key=lambda x: (degrees[x], -x))
    return best + 1, degrees[best]


def disjoint_pair_bound_holds(
    F: Family, budget: Optional[int] = None
) -> bool:
    """
    Check that `F` has at least removal^2 / (2 C(2k, k)) disjoint
    pairs, in exact integer form.
    """
    G = build_graph(F)
    value = removal_number(F, budget=budget).value
    return 2 * binomial(2 * F.k, F.k) * G.edge_count >= value**2
