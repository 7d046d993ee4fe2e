from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Tuple

import networkx as nx
import numpy as np

from unionfam.setfam import Family, KSet, ParameterMismatch
from unionfam.setfam.bits import iter_bits, popcount


@dataclass(frozen=True)
class DisjointnessGraph:
    """
    Induced Kneser graph on a family: vertex `i` is the set
    `family[i]`, and two vertices are adjacent exactly when their
    sets are disjoint. `adjacency[i]` is the neighbourhood of
    vertex `i` as a bitset over vertex indices.
    """

    family: Family
    adjacency: Tuple[int, ...]

    def __len__(self) -> int:
        return len(self.adjacency)

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.adjacency[i] >> j & 1)

    def degree(self, i: int) -> int:
        return popcount(self.adjacency[i])

    @cached_property
    def edge_count(self) -> int:
        return sum(popcount(row) for row in self.adjacency) // 2

    def edges(self) -> Iterator[Tuple[int, int]]:
        for i, row in enumerate(self.adjacency):
            for j in iter_bits(row >> (i + 1)):
                yield i, i + 1 + j

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        for i, s in enumerate(self.family):
            graph.add_node(i, elements=s.elements)
        graph.add_edges_from(self.edges())
        return graph


def _rows_from_matrix(matrix: np.ndarray) -> Tuple[int, ...]:
    packed = np.packbits(matrix, axis=1, bitorder="little")
    return tuple(int.from_bytes(row.tobytes(), "little") for row in packed)


def build_graph(F: Family) -> DisjointnessGraph:
    """
    Build the disjointness graph of `F`. For ground sets that
    fit in a machine word the adjacency matrix comes from one
    broadcast AND over the set masks.
    """
    m = len(F)
    if m == 0:
        return DisjointnessGraph(F, ())

    if F.n <= 64:
        masks = np.array(F.masks, dtype=np.uint64)
        matrix = (masks[:, None] & masks[None, :]) == 0
        np.fill_diagonal(matrix, False)
        return DisjointnessGraph(F, _rows_from_matrix(matrix))

    rows = [0] * m
    masks = F.masks
    for i in range(m):
        for j in range(i + 1, m):
            if not masks[i] & masks[j]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return DisjointnessGraph(F, tuple(rows))


def neighborhood(F: Family, A: KSet) -> Family:
    """The members of `F` disjoint from `A`"""
    if A.n != F.n or len(A) != F.k:
        raise ParameterMismatch(
            "Set {} is not a {}-set on [{}]".format(A, F.k, F.n)
        )
    return Family(F.n, F.k, tuple(s for s in F if s.isdisjoint(A)))


def disjoint_pair_count(F: Family) -> int:
    return build_graph(F).edge_count
