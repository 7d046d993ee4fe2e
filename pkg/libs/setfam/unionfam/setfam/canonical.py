"""
Canonical forms of uniform families under relabeling of [n].

Elements are kept in an ordered partition that is refined by
colour refinement on the element/set incidence structure. When
refinement stalls, one element of the first non-trivial cell is
individualized and the search branches. Every leaf is a labeling,
and the certificate is the least sorted mask sequence over all
leaves. Twins and automorphisms found between equal leaves prune
branches whose leaves would repeat ones already seen.
"""

from dataclasses import dataclass, field
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

from unionfam.setfam.bits import iter_bits
from unionfam.setfam.family import Family, permute_mask

Cells = List[List[int]]


@dataclass(frozen=True)
class CanonicalForm:
    """
    Isomorphism-class representative of a family. Two families
    have equal forms exactly when some permutation of [n] maps one
    onto the other; `permutation` is one such relabeling taking
    the source family to `family()`.
    """

    n: int
    k: int
    masks: Tuple[int, ...]
    permutation: Tuple[int, ...] = field(compare=False, repr=False)

    @property
    def certificate(self) -> bytes:
        width = (self.n + 7) // 8
        header = self.n.to_bytes(2, "big") + self.k.to_bytes(2, "big")
        body = b"".join(mask.to_bytes(width, "big") for mask in self.masks)
        return header + body

    def family(self) -> Family:
        return Family.from_masks(self.n, self.k, self.masks)


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x: int, y: int) -> None:
        x, y = self.find(x), self.find(y)
        if x != y:
            self.parent[max(x, y)] = min(x, y)


class _LabelingSearch:
    def __init__(self, F: Family):
        self.n = F.n
        self.masks = F.masks
        self.set_elements = [list(iter_bits(m)) for m in self.masks]
        self.cols = [0] * F.n
        for j, mask in enumerate(self.masks):
            for p in iter_bits(mask):
                self.cols[p] |= 1 << j
        self.element_sets = [list(iter_bits(c)) for c in self.cols]

        self.first = None
        self.best = None
        self.generators = []

    def refine(self, cells: Cells) -> Cells:
        color = [0] * self.n
        while True:
            for ci, cell in enumerate(cells):
                for x in cell:
                    color[x] = ci
            set_sig = [
                tuple(sorted(color[x] for x in elements))
                for elements in self.set_elements
            ]

            refined, changed = [], False
            for cell in cells:
                if len(cell) == 1:
                    refined.append(cell)
                    continue
                sig = {
                    x: tuple(sorted(set_sig[j] for j in self.element_sets[x]))
                    for x in cell
                }
                keys = sorted(set(sig.values()))
                if len(keys) == 1:
                    refined.append(cell)
                    continue
                changed = True
                for key in keys:
                    refined.append([x for x in cell if sig[x] == key])
            cells = refined
            if not changed:
                return cells

    def _twins(self, cell: Sequence[int]) -> bool:
        return len({self.cols[x] for x in cell}) == 1

    def _orbit_reps(self, path: Sequence[int]):
        uf = _UnionFind(self.n)
        for gamma in self.generators:
            if all(gamma[p] == p for p in path):
                for x, y in enumerate(gamma):
                    uf.union(x, y)
        return uf

    def _leaf(self, cells: Cells, path: List[int]) -> Optional[int]:
        labels = [0] * self.n
        for i, cell in enumerate(cells):
            labels[cell[0]] = i
        cert = tuple(sorted(permute_mask(m, labels) for m in self.masks))

        if self.first is None:
            self.first = (cert, labels, path)
            self.best = (cert, labels)
            return None

        for ref_cert, ref_labels in (self.first[:2], self.best):
            if cert == ref_cert:
                inverse = [0] * self.n
                for x, label in enumerate(ref_labels):
                    inverse[label] = x
                gamma = [inverse[labels[x]] for x in range(self.n)]
                if gamma != list(range(self.n)):
                    self.generators.append(gamma)

        if cert == self.first[0]:
            # this whole subtree mirrors one along the first path,
            # so jump back to where the two paths diverged
            common = 0
            for a, b in zip(path, self.first[2]):
                if a != b:
                    break
                common += 1
            return common
        if cert < self.best[0]:
            self.best = (cert, labels)
        return None

    def search(self, cells: Cells, path: List[int]) -> Optional[int]:
        target = None
        for ci, cell in enumerate(cells):
            if len(cell) > 1 and not self._twins(cell):
                target = ci
                break

        # only singletons and twin classes left: every ordering
        # of the twins gives the same certificate
        if target is None:
            leaf = [[x] for cell in cells for x in cell]
            return self._leaf(leaf, path)

        depth = len(path)
        tried = []
        for v in cells[target]:
            if any(self.cols[v] == self.cols[u] for u in tried):
                continue
            if tried:
                uf = self._orbit_reps(path)
                if uf.find(v) in {uf.find(u) for u in tried}:
                    continue

            rest = [x for x in cells[target] if x != v]
            child = cells[:target] + [[v], rest] + cells[target + 1 :]
            jump = self.search(self.refine(child), path + [v])
            tried.append(v)
            if jump is not None and jump < depth:
                return jump
        return None


@lru_cache(maxsize=8192)
def canonical_form(F: Family) -> CanonicalForm:
    """
    Compute the canonical form of `F`. Results are cached, so
    repeated calls on equal families are free.
    """
    search = _LabelingSearch(F)
    search.search(search.refine([list(range(F.n))]), [])
    cert, labels = search.best
    permutation = tuple(label + 1 for label in labels)
    return CanonicalForm(F.n, F.k, cert, permutation)
