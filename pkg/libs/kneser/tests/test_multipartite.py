from itertools import combinations, permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from unionfam.kneser import (
    ForbiddenWitness,
    build_graph,
    contains_complete_multipartite,
    has_r_pairwise_disjoint,
    is_union_intersecting,
    star_count_bound_holds,
)
from unionfam.setfam import (
    BadParameters,
    BudgetExceeded,
    Family,
    apply_permutation,
    make_family,
)


@st.composite
def families(draw, max_n=8, max_size=9):
    n = draw(st.integers(min_value=4, max_value=max_n))
    k = draw(st.integers(min_value=1, max_value=2))
    pool = list(combinations(range(1, n + 1), k))
    picked = draw(
        st.lists(
            st.sampled_from(pool),
            unique=True,
            max_size=min(len(pool), max_size),
        )
    )
    return make_family(n, k, picked)


def brute_force(G, sizes):
    """First witness in lexicographic order of the vertex tuple"""
    total = sum(sizes)
    for vertices in permutations(range(len(G)), total):
        parts, start = [], 0
        for size in sizes:
            parts.append(vertices[start : start + size])
            start += size
        if any(list(part) != sorted(part) for part in parts):
            continue
        witness = ForbiddenWitness(tuple(parts))
        if witness.verify(G):
            return witness
    return None


def test_examples():
    G = build_graph(make_family(4, 2, [[1, 2], [3, 4]]))
    witness = contains_complete_multipartite(G, [1, 1])
    assert witness.parts == ((0,), (1,))
    assert contains_complete_multipartite(G, [1, 2]) is None

    # all 2-sets of [4] inside [6]: a perfect matching
    F = make_family(6, 2, combinations(range(1, 5), 2))
    assert contains_complete_multipartite(build_graph(F), [1, 2]) is None

    # three parts of two 2-sets each cover at least 9 elements
    G = build_graph(Family.complete(6, 2))
    assert contains_complete_multipartite(G, [2, 2, 2]) is None
    F = Family.complete(9, 2)
    witness = contains_complete_multipartite(build_graph(F), [2, 2, 2])
    assert witness is not None
    assert witness.verify(build_graph(F))
    assert [[s.elements for s in part] for part in witness.sets(F)] == [
        [(1, 2), (1, 3)],
        [(4, 5), (4, 6)],
        [(7, 8), (7, 9)],
    ]


def test_within_and_through():
    F = make_family(6, 2, [[1, 2], [3, 4], [5, 6]])
    G = build_graph(F)
    assert contains_complete_multipartite(G, [1, 1]).parts == ((0,), (1,))
    assert contains_complete_multipartite(G, [1, 1], through=2).parts == (
        (0,),
        (2,),
    )
    witness = contains_complete_multipartite(G, [1, 1], within=[1, 2])
    assert witness.parts == ((1,), (2,))
    assert contains_complete_multipartite(G, [1, 1], within=[0]) is None
    assert (
        contains_complete_multipartite(G, [1, 1], within=[0, 1], through=2)
        is None
    )


def test_bad_sizes():
    G = build_graph(make_family(4, 2, [[1, 2], [3, 4]]))
    with pytest.raises(BadParameters):
        contains_complete_multipartite(G, [])
    with pytest.raises(BadParameters):
        contains_complete_multipartite(G, [1, 0])


def test_budget():
    G = build_graph(Family.complete(6, 2))
    with pytest.raises(BudgetExceeded):
        contains_complete_multipartite(G, [2, 2, 2], budget=5)


@settings(max_examples=150, deadline=None)
@given(
    families(),
    st.lists(st.integers(1, 2), min_size=1, max_size=3).filter(
        lambda sizes: sum(sizes) <= 4
    ),
)
def test_matches_brute_force(F, sizes):
    G = build_graph(F)
    expected = brute_force(G, sizes)
    witness = contains_complete_multipartite(G, sizes)
    assert witness == expected
    if witness is not None:
        assert witness.verify(G)
        assert [len(part) for part in witness.parts] == sizes


@settings(max_examples=80, deadline=None)
@given(families(), st.integers(1, 2), st.integers(1, 3))
def test_monotone_in_part_sizes(F, s, t):
    G = build_graph(F)
    if contains_complete_multipartite(G, [s, t]) is None:
        return
    for smaller_s in range(1, s + 1):
        for smaller_t in range(1, t + 1):
            assert contains_complete_multipartite(G, [smaller_s, smaller_t])


@settings(max_examples=60, deadline=None)
@given(families(), st.data())
def test_permutation_equivariance(F, data):
    sigma = data.draw(st.permutations(list(range(1, F.n + 1))))
    G = apply_permutation(F, sigma)
    for s, t in [(1, 1), (1, 2), (2, 2)]:
        assert is_union_intersecting(F, s, t)[0] == (
            is_union_intersecting(G, s, t)[0]
        )


def test_is_union_intersecting():
    triangle = make_family(3, 2, [[1, 2], [1, 3], [2, 3]])
    assert is_union_intersecting(triangle, 1, 1) == (True, None)

    F = make_family(4, 2, [[1, 2], [3, 4]])
    found, witness = is_union_intersecting(F, 1, 1)
    assert not found
    assert witness.parts == ((0,), (1,))

    star = Family.complete(8, 3)
    star = Family.from_masks(8, 3, [m for m in star.masks if m & 1])
    F = star.union(make_family(8, 3, [[2, 3, 4]]))
    assert is_union_intersecting(F, 2, 2)[0]
    assert not is_union_intersecting(F, 1, 1)[0]

    with pytest.raises(BadParameters):
        is_union_intersecting(F, 2, 1)
    with pytest.raises(BadParameters):
        is_union_intersecting(F, 0, 1)


def test_has_r_pairwise_disjoint():
    F = make_family(6, 2, [[1, 2], [3, 4], [5, 6]])
    assert has_r_pairwise_disjoint(F, 3)
    assert not has_r_pairwise_disjoint(F, 4)
    triangle = make_family(3, 2, [[1, 2], [1, 3], [2, 3]])
    assert not has_r_pairwise_disjoint(triangle, 2)
    assert has_r_pairwise_disjoint(triangle, 1)
    assert not has_r_pairwise_disjoint(Family(3, 2), 1)

    # the Petersen graph is triangle-free
    assert not has_r_pairwise_disjoint(Family.complete(5, 2), 3)
    with pytest.raises(BadParameters):
        has_r_pairwise_disjoint(F, 0)


@settings(max_examples=80, deadline=None)
@given(families(), st.integers(1, 2), st.integers(2, 3))
def test_star_counting_holds_when_free(F, s, t):
    if is_union_intersecting(F, s, t)[0]:
        assert star_count_bound_holds(build_graph(F), s, t)


def test_star_counting_detects_edges():
    square = make_family(4, 2, [[1, 2], [3, 4], [1, 3], [2, 4]])
    assert not star_count_bound_holds(build_graph(square), 1, 1)
    assert star_count_bound_holds(build_graph(square), 2, 2)
