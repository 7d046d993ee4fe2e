import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from unionfam.report import PASS, SKIPPED
from unionfam.search import (
    ConstraintSpec,
    branch_and_bound_max,
    oracle_max_family,
    satisfies,
    threshold_scan,
)
from unionfam.setfam import Infeasible

PATTERNS = [[1, 1], [1, 2], [2, 2], [1, 1, 1], [1, 3]]
INSTANCES = [(4, 2), (5, 2), (6, 2), (5, 3)]
SPECS = [
    ConstraintSpec(pattern=pattern, removal_min=removal)
    for pattern in PATTERNS
    for removal in [None, (2, 1)]
] + [ConstraintSpec(removal_min=(2, 2))]

# anchors are 2-sets, so these only run with k = 2
ANCHORED = [
    ConstraintSpec(pattern=[1, 1], must_contain=[[2, 3]]),
    ConstraintSpec(pattern=[1, 2], must_avoid=[[1, 2], [3, 4]]),
    ConstraintSpec(pattern=[2, 2], must_contain=[[1, 2], [3, 4]]),
    ConstraintSpec(must_avoid=[[1, 2]]),
]
CASES = [(n, k, spec) for n, k in INSTANCES for spec in SPECS] + [
    (n, k, spec) for n, k in INSTANCES if k == 2 for spec in ANCHORED
]


@pytest.mark.parametrize("n,k,spec", CASES)
def test_agrees_with_oracle(n, k, spec):
    try:
        expected = oracle_max_family(n, k, spec)
    except Infeasible:
        with pytest.raises(Infeasible):
            branch_and_bound_max(n, k, spec)
        return

    result = branch_and_bound_max(n, k, spec)
    assert result.optimal
    assert not result.wall_budget_hit
    assert result.max_size == expected.max_size
    assert satisfies(result.witness, spec)


def test_examples():
    spec = ConstraintSpec(pattern=[1, 1])
    assert branch_and_bound_max(7, 2, spec).max_size == 6

    # nothing survives a single-vertex pattern
    result = branch_and_bound_max(5, 2, ConstraintSpec(pattern=[1]))
    assert result.max_size == 0
    assert result.optimal


def test_budget():
    spec = ConstraintSpec(pattern=[1, 1])
    result = branch_and_bound_max(12, 3, spec, budget=10)
    assert not result.optimal
    assert result.wall_budget_hit
    assert result.nodes_explored > 10
    assert satisfies(result.witness, spec)

    result = branch_and_bound_max(12, 3, spec, seconds=0)
    assert not result.optimal


@settings(max_examples=25, deadline=None)
@given(st.permutations(list(range(1, 6))), st.sampled_from([[1, 1], [1, 2]]))
def test_relabeling_anchors(sigma, pattern):
    anchor = [1, 2]
    relabeled = [sigma[x - 1] for x in anchor]
    first = ConstraintSpec(pattern=pattern, must_contain=[anchor])
    second = ConstraintSpec(pattern=pattern, must_contain=[relabeled])
    assert (
        branch_and_bound_max(5, 2, first).max_size
        == branch_and_bound_max(5, 2, second).max_size
    )


def test_threshold_scan():
    scan = threshold_scan(3, 1, 2, 0, [7, 8], budget=20000)
    assert len(scan.ledger) == 2
    for verdict in scan.ledger.verdict:
        assert verdict in (PASS, SKIPPED)
    if scan.first_match is not None:
        assert scan.first_match in (7, 8)
    assert scan.ledger.exit_code in (0, 2)
