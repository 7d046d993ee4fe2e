from itertools import combinations
from unittest.mock import patch

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from unionfam.bounds import binomial
from unionfam.kneser import build_graph, contains_complete_multipartite
from unionfam.setfam import (
    Family,
    KSet,
    NotUnionIntersecting,
    TheoremViolation,
    make_family,
)
from unionfam.structure import is_intersecting, peel, removal_number


@st.composite
def union_intersecting_families(draw, n=10, k=3, t=3, max_size=30):
    """Greedily grow a (1,t)-union intersecting family in random order"""
    order = draw(st.permutations(list(combinations(range(1, n + 1), k))))
    masks = []
    for candidate in order:
        trial = Family.from_masks(n, k, masks + [KSet(n, candidate).mask])
        G = build_graph(trial)
        if contains_complete_multipartite(G, [1, t]) is None:
            masks = list(trial.masks)
        if len(masks) == max_size:
            break
    return Family.from_masks(n, k, masks)


def test_examples():
    triangle = make_family(3, 2, [[1, 2], [1, 3], [2, 3]])
    trace = peel(triangle, 2)
    assert trace.m == 0
    assert len(trace.removed) == 0
    assert trace.core == triangle

    trace = peel(make_family(4, 2, [[1, 2], [3, 4]]), 2)
    assert trace.m == 1
    assert [(b.elements, c.elements) for b, c in trace.pairs] == [
        ((1, 2), (3, 4))
    ]
    assert trace.removed.to_lists() == [[3, 4]]
    assert trace.core.to_lists() == [[1, 2]]
    assert trace.to_record()["m"] == 1


def test_not_union_intersecting():
    F = make_family(5, 2, [[1, 2], [3, 4], [3, 5]])
    with pytest.raises(NotUnionIntersecting):
        peel(F, 2)
    assert peel(F, 3).m == 1


def test_violation_is_reported():
    F = make_family(4, 2, [[1, 2], [3, 4]])
    with patch("unionfam.structure.peeling.binomial", return_value=0):
        with pytest.raises(TheoremViolation):
            peel(F, 2)
        assert peel(F, 2, check=False).m == 1


@settings(max_examples=25, deadline=None)
@given(union_intersecting_families())
def test_random_traces(F):
    t = 3
    trace = peel(F, t)
    assert trace.m <= binomial(5, 2)
    assert len(trace.removed) <= trace.m * (t - 1)
    assert is_intersecting(trace.core)
    assert len(trace.core) + len(trace.removed) == len(F)
    assert trace.core.union(trace.removed) == F

    # each round's first set is kept and its partner is removed
    for b, c in trace.pairs:
        assert b in trace.core
        assert c in trace.removed
        assert b.isdisjoint(c)
    assert removal_number(F).value <= len(trace.removed)
