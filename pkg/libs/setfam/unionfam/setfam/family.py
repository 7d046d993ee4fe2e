from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Dict, Iterable, Iterator, List, Sequence, Tuple

from unionfam.setfam.bits import iter_bits, popcount, to_mask
from unionfam.setfam.exceptions import (
    BadParameters,
    DuplicateSet,
    ElementOutOfRange,
    NotAPermutation,
    ParameterMismatch,
    WrongSetSize,
)


@dataclass(frozen=True, order=True)
class KSet:
    """
    A subset of the ground set [n]. Elements are 1-indexed;
    `mask` has bit i - 1 set for every element i. Sets order
    lexicographically by their sorted element tuples, so
    {1,2} < {1,3} < {1,4} < {2,3}.
    """

    n: int
    elements: Tuple[int, ...]
    mask: int = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        elements = tuple(sorted(self.elements))
        for x in elements:
            if not 1 <= x <= self.n:
                raise ElementOutOfRange(
                    "Element {} of set {} is outside [1, {}]".format(
                        x, list(self.elements), self.n
                    )
                )
        if len(set(elements)) != len(elements):
            raise WrongSetSize(
                "Set {} repeats an element".format(list(self.elements))
            )
        object.__setattr__(self, "elements", elements)
        object.__setattr__(self, "mask", to_mask(x - 1 for x in elements))

    @classmethod
    def from_mask(cls, n: int, mask: int) -> "KSet":
        if mask >> n:
            raise ElementOutOfRange(
                "Mask {:b} has bits beyond position {}".format(mask, n)
            )
        return cls(n, tuple(p + 1 for p in iter_bits(mask)))

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __contains__(self, x: int) -> bool:
        return 1 <= x <= self.n and bool(self.mask >> (x - 1) & 1)

    def isdisjoint(self, other: "KSet") -> bool:
        return not self.mask & other.mask

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.elements)) + "}"


@dataclass(frozen=True)
class Family:
    """
    Duplicate-free collection of k-sets over [n], kept in
    lexicographic order. Families are values: every operation
    returns a new family.
    """

    n: int
    k: int
    sets: Tuple[KSet, ...] = ()

    def __post_init__(self):
        if not 1 <= self.k <= self.n:
            raise BadParameters(
                "Need 1 <= k <= n, got n={}, k={}".format(self.n, self.k)
            )
        for s in self.sets:
            if s.n != self.n:
                raise ParameterMismatch(
                    "Set {} lives on [{}], family on [{}]".format(
                        s, s.n, self.n
                    )
                )
            if len(s) != self.k:
                raise WrongSetSize(
                    "Set {} has {} elements, expected {}".format(
                        s, len(s), self.k
                    )
                )
        sets = tuple(sorted(self.sets))
        for first, second in zip(sets, sets[1:]):
            if first == second:
                raise DuplicateSet("Set {} appears twice".format(first))
        object.__setattr__(self, "sets", sets)

    @classmethod
    def from_masks(cls, n: int, k: int, masks: Iterable[int]) -> "Family":
        sets = []
        for mask in masks:
            if popcount(mask) != k:
                raise WrongSetSize(
                    "Mask {:b} does not encode a {}-set".format(mask, k)
                )
            sets.append(KSet.from_mask(n, mask))
        return cls(n, k, tuple(sets))

    @classmethod
    def complete(cls, n: int, k: int) -> "Family":
        """All k-subsets of [n]"""
        sets = [KSet(n, c) for c in combinations(range(1, n + 1), k)]
        return cls(n, k, tuple(sets))

    @cached_property
    def masks(self) -> Tuple[int, ...]:
        return tuple(s.mask for s in self.sets)

    @cached_property
    def _index(self) -> Dict[int, int]:
        return {mask: i for i, mask in enumerate(self.masks)}

    def __len__(self) -> int:
        return len(self.sets)

    def __iter__(self) -> Iterator[KSet]:
        return iter(self.sets)

    def __getitem__(self, idx: int) -> KSet:
        return self.sets[idx]

    def __contains__(self, s: KSet) -> bool:
        return s.n == self.n and s.mask in self._index

    def index(self, s: KSet) -> int:
        try:
            return self._index[s.mask]
        except KeyError:
            raise ValueError(f"{s} is not in the family") from None

    def _check_compatible(self, other: "Family") -> None:
        if (self.n, self.k) != (other.n, other.k):
            raise ParameterMismatch(
                "Can't combine a family on (n={}, k={}) with "
                "one on (n={}, k={})".format(
                    self.n, self.k, other.n, other.k
                )
            )

    def union(self, other: "Family") -> "Family":
        self._check_compatible(other)
        masks = set(self.masks) | set(other.masks)
        return Family.from_masks(self.n, self.k, masks)

    def difference(self, other: "Family") -> "Family":
        self._check_compatible(other)
        masks = set(self.masks) - set(other.masks)
        return Family.from_masks(self.n, self.k, masks)

    def with_sets(self, sets: Iterable[KSet]) -> "Family":
        """Add `sets`, ignoring ones already present"""
        masks = set(self.masks)
        for s in sets:
            if s.n != self.n:
                raise ParameterMismatch(f"{s} is not a set on [{self.n}]")
            masks.add(s.mask)
        return Family.from_masks(self.n, self.k, masks)

    def subfamily(self, indices: Iterable[int]) -> "Family":
        return Family(self.n, self.k, tuple(self.sets[i] for i in indices))

    def degrees(self) -> Tuple[int, ...]:
        """Number of member sets containing each element 1..n"""
        counts = [0] * self.n
        for mask in self.masks:
            for p in iter_bits(mask):
                counts[p] += 1
        return tuple(counts)

    def to_lists(self) -> List[List[int]]:
        return [list(s.elements) for s in self.sets]


def make_family(n: int, k: int, sets: Iterable[Sequence[int]]) -> Family:
    """
    Build a family from element lists, validating every set.

    Args:
        n: Size of the ground set [n]
        k: Size of every member set
        sets: Element lists, 1-indexed, in any order

    Returns:
        The family in canonical order
    """
    if not 1 <= k <= n:
        raise BadParameters(f"Need 1 <= k <= n, got n={n}, k={k}")
    ksets = []
    for elements in sets:
        s = KSet(n, tuple(elements))
        if len(s) != k:
            raise WrongSetSize(
                "Set {} has {} elements, expected {}".format(
                    list(elements), len(s), k
                )
            )
        ksets.append(s)
    return Family(n, k, tuple(ksets))


def check_permutation(n: int, sigma: Sequence[int]) -> Tuple[int, ...]:
    sigma = tuple(sigma)
    if len(sigma) != n or sorted(sigma) != list(range(1, n + 1)):
        raise NotAPermutation(
            "{} is not a permutation of [1, {}]".format(list(sigma), n)
        )
    return sigma


def permute_mask(mask: int, images: Sequence[int]) -> int:
    """Relabel a mask given 0-based images of each position"""
    out = 0
    for p in iter_bits(mask):
        out |= 1 << images[p]
    return out


def apply_permutation(F: Family, sigma: Sequence[int]) -> Family:
    """
    Relabel the ground set of `F`.

    Args:
        F: Family to relabel
        sigma:
            One-line notation of the permutation: element
            i is sent to `sigma[i - 1]`.
    """
    sigma = check_permutation(F.n, sigma)
    images = [x - 1 for x in sigma]
    masks = [permute_mask(mask, images) for mask in F.masks]
    return Family.from_masks(F.n, F.k, masks)
