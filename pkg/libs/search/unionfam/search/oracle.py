"""
Brute-force searches over every subfamily of the k-sets of [n].
They are only meant for tiny instances, where they serve as the
reference the branch and bound search is checked against.
"""

import logging
from typing import Callable, Dict, List, Optional

from unionfam.bounds import binomial
from unionfam.search.constraints import (
    ConstraintSpec,
    SearchResult,
    Universe,
    satisfies,
)
from unionfam.setfam import (
    BadParameters,
    Budget,
    Family,
    Infeasible,
    LimitExceeded,
    TheoremViolation,
    TooLarge,
    canonical_form,
)
from unionfam.setfam.bits import iter_bits, popcount

MAX_ORACLE_SETS = 24


def _universe(n: int, k: int, spec: ConstraintSpec) -> Universe:
    if not 1 <= k <= n:
        raise BadParameters(f"Need 1 <= k <= n, got n={n}, k={k}")
    size = binomial(n, k)
    if size > MAX_ORACLE_SETS:
        raise TooLarge(
            "C({}, {}) = {} sets is too many to enumerate, the oracle "
            "handles at most {}".format(n, k, size, MAX_ORACLE_SETS)
        )
    return Universe(n, k, spec)


def _walk(U: Universe, counter: Budget, visit: Callable[[int], None]):
    """
    Include/exclude walk over the subfamilies that satisfy the
    hereditary constraints. A partial family that violates them
    is cut along with all its extensions.
    """

    def descend(i: int, chosen: int):
        counter.tick()
        if i == U.size:
            visit(chosen)
            return

        bit = 1 << i
        if not bit & U.forbidden and not U.creates_pattern(chosen, i):
            descend(i + 1, chosen | bit)
        if not bit & U.required:
            descend(i + 1, chosen)

    descend(0, 0)


def oracle_max_family(
    n: int, k: int, spec: ConstraintSpec
) -> SearchResult:
    """
    Find a largest family of k-sets of [n] satisfying `spec` by
    enumerating subfamilies. Among the largest ones the witness
    is the one with the lexicographically smallest index tuple.

    Raises:
        TooLarge: If C(n, k) exceeds `MAX_ORACLE_SETS`
        Infeasible: If no family satisfies `spec`
    """
    U = _universe(n, k, spec)
    counter = Budget(None, "oracle")
    best: List[Optional[tuple]] = [None]

    def visit(chosen: int):
        if not U.upward_ok(chosen):
            return
        key = (-popcount(chosen), list(iter_bits(chosen)))
        if best[0] is None or key < best[0]:
            best[0] = key

    _walk(U, counter, visit)
    if best[0] is None:
        raise Infeasible(
            "No family of {}-sets of [{}] satisfies {}".format(
                k, n, spec.parameters()
            )
        )

    witness = U.family.subfamily(best[0][1])
    if not satisfies(witness, spec):
        raise TheoremViolation(
            f"Oracle witness {witness.to_lists()} fails its constraints"
        )
    logging.debug(
        "Oracle on n=%d, k=%d found a family of size %d after %d nodes",
        n,
        k,
        len(witness),
        counter.nodes,
    )
    return SearchResult(len(witness), witness, True, counter.nodes)


def enumerate_maximal(
    n: int, k: int, spec: ConstraintSpec, limit: Optional[int] = None
) -> List[Family]:
    """
    List every family satisfying `spec` that no k-set can be
    added to, one canonical representative per isomorphism
    class, largest first and then by certificate.

    Raises:
        TooLarge: If C(n, k) exceeds `MAX_ORACLE_SETS`
        LimitExceeded: If there are more than `limit` classes
    """
    U = _universe(n, k, spec)
    counter = Budget(None, "maximal family enumeration")
    classes: Dict[bytes, Family] = {}

    def visit(chosen: int):
        for v in range(U.size):
            if (chosen | U.forbidden) >> v & 1:
                continue
            if not U.creates_pattern(chosen, v):
                return
        if not U.upward_ok(chosen):
            return

        form = canonical_form(U.subfamily(chosen))
        if form.certificate in classes:
            return
        classes[form.certificate] = form.family()
        if limit is not None and len(classes) > limit:
            raise LimitExceeded(
                "More than {} classes of maximal families on "
                "n={}, k={}".format(limit, n, k)
            )

    _walk(U, counter, visit)
    order = sorted(classes, key=lambda c: (-len(classes[c]), c))
    logging.debug(
        "Found %d classes of maximal families on n=%d, k=%d",
        len(order),
        n,
        k,
    )
    return [classes[c] for c in order]
