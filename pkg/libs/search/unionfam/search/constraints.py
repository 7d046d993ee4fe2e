"""
Constraints on subfamilies of all k-sets of [n], and the
search universe the exact searches share.

A forbidden pattern and `must_avoid` are hereditary: every
subfamily of a family satisfying them satisfies them too. A
removal minimum and `must_contain` are upward closed. The
searches prune on the first kind and only test the second
kind on complete assignments.
"""

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Tuple

from unionfam.kneser import build_graph, contains_complete_multipartite
from unionfam.setfam import BadParameters, Family, KSet, WrongSetSize
from unionfam.setfam.bits import iter_bits
from unionfam.structure import removal_number


def _sets(n: int, sets: Iterable[Iterable[int]]) -> Tuple[KSet, ...]:
    return tuple(KSet(n, tuple(s)) for s in sets)


@dataclass(frozen=True)
class ConstraintSpec:
    """
    What a family must satisfy.

    Args:
        pattern:
            Part sizes of a complete multipartite graph the
            disjointness graph must not contain. `[s, t]`
            asks for an (s,t)-union intersecting family.
        removal_min:
            `(r, c)`, asking that at least `c` members be
            removed before no r members are pairwise disjoint
        must_contain: k-sets every family must include
        must_avoid: k-sets no family may include
    """

    pattern: Optional[Tuple[int, ...]] = None
    removal_min: Optional[Tuple[int, int]] = None
    must_contain: Tuple[Tuple[int, ...], ...] = ()
    must_avoid: Tuple[Tuple[int, ...], ...] = ()

    def __post_init__(self):
        if self.pattern is not None:
            pattern = tuple(self.pattern)
            if not pattern or any(size < 1 for size in pattern):
                raise BadParameters(
                    f"Pattern sizes must be positive, got {list(pattern)}"
                )
            object.__setattr__(self, "pattern", pattern)
        if self.removal_min is not None:
            r, c = self.removal_min
            if r < 2 or c < 0:
                raise BadParameters(
                    f"Need r >= 2 and c >= 0 in removal_min, got ({r}, {c})"
                )
            object.__setattr__(self, "removal_min", (r, c))
        for name in ("must_contain", "must_avoid"):
            sets = tuple(tuple(sorted(s)) for s in getattr(self, name))
            object.__setattr__(self, name, sets)

        if (
            self.pattern is None
            and self.removal_min is None
            and not self.must_contain
            and not self.must_avoid
        ):
            raise BadParameters("A constraint spec needs some constraint")
        if set(self.must_contain) & set(self.must_avoid):
            raise BadParameters(
                "Sets {} are both required and forbidden".format(
                    sorted(set(self.must_contain) & set(self.must_avoid))
                )
            )

    @property
    def anchored(self) -> bool:
        return bool(self.must_contain or self.must_avoid)

    def parameters(self):
        return {
            "pattern": list(self.pattern) if self.pattern else None,
            "removal_min": list(self.removal_min)
            if self.removal_min
            else None,
            "must_contain": [list(s) for s in self.must_contain],
            "must_avoid": [list(s) for s in self.must_avoid],
        }


@dataclass(frozen=True)
class SearchResult:
    max_size: int
    witness: Family
    optimal: bool
    nodes_explored: int
    wall_budget_hit: bool = False

    def to_record(self):
        return {
            "max_size": self.max_size,
            "witness": self.witness.to_lists(),
            "optimal": self.optimal,
            "nodes_explored": self.nodes_explored,
            "wall_budget_hit": self.wall_budget_hit,
        }


def satisfies(F: Family, spec: ConstraintSpec) -> bool:
    """
    Check `F` against every constraint in `spec` directly,
    without any of the searches' bookkeeping.
    """
    members = set(F)
    for s in _sets(F.n, spec.must_contain):
        if s not in members:
            return False
    for s in _sets(F.n, spec.must_avoid):
        if s in members:
            return False
    if spec.pattern is not None:
        G = build_graph(F)
        if contains_complete_multipartite(G, spec.pattern) is not None:
            return False
    if spec.removal_min is not None:
        r, c = spec.removal_min
        if removal_number(F, r).value < c:
            return False
    return True


class Universe:
    """
    All k-sets of [n] in lexicographic order with their
    disjointness graph. Subfamilies are bitsets over the indices.
    """

    def __init__(self, n: int, k: int, spec: ConstraintSpec):
        self.n, self.k, self.spec = n, k, spec
        self.family = Family.complete(n, k)
        self.graph = build_graph(self.family)
        self.size = len(self.family)
        self.required = self._indices(self.spec.must_contain)
        self.forbidden = self._indices(self.spec.must_avoid)

    def _indices(self, sets: Sequence[Sequence[int]]) -> int:
        mask = 0
        for s in _sets(self.n, sets):
            if len(s) != self.k:
                raise WrongSetSize(
                    f"Constraint set {s} is not a {self.k}-set"
                )
            mask |= 1 << self.family.index(s)
        return mask

    def creates_pattern(self, chosen: int, v: int) -> bool:
        """Whether adding index `v` to `chosen` creates the pattern"""
        if self.spec.pattern is None:
            return False
        witness = contains_complete_multipartite(
            self.graph,
            self.spec.pattern,
            within=iter_bits(chosen | (1 << v)),
            through=v,
        )
        return witness is not None

    def hereditary_ok(self, chosen: int) -> bool:
        if chosen & self.forbidden:
            return False
        if self.spec.pattern is None:
            return True
        witness = contains_complete_multipartite(
            self.graph, self.spec.pattern, within=iter_bits(chosen)
        )
        return witness is None

    def upward_ok(self, chosen: int) -> bool:
        if self.required & ~chosen:
            return False
        if self.spec.removal_min is None:
            return True
        r, c = self.spec.removal_min
        return removal_number(self.subfamily(chosen), r).value >= c

    def subfamily(self, chosen: int) -> Family:
        return self.family.subfamily(iter_bits(chosen))
