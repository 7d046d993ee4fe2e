import pytest

from unionfam.constructions import hilton_milner_triangle, star
from unionfam.search import (
    ConstraintSpec,
    enumerate_maximal,
    oracle_max_family,
    satisfies,
)
from unionfam.setfam import (
    BadParameters,
    Family,
    Infeasible,
    LimitExceeded,
    TooLarge,
    is_isomorphic,
)


def intersecting():
    return ConstraintSpec(pattern=[1, 1])


def test_spec_validation():
    with pytest.raises(BadParameters):
        ConstraintSpec()
    with pytest.raises(BadParameters):
        ConstraintSpec(pattern=[1, 0])
    with pytest.raises(BadParameters):
        ConstraintSpec(removal_min=(1, 1))
    with pytest.raises(BadParameters):
        ConstraintSpec(must_contain=[[1, 2]], must_avoid=[[2, 1]])

    spec = ConstraintSpec(pattern=[1, 2], must_contain=[[2, 1]])
    assert spec.pattern == (1, 2)
    assert spec.must_contain == ((1, 2),)
    assert spec.anchored


def test_erdos_ko_rado():
    result = oracle_max_family(5, 2, intersecting())
    assert result.max_size == 4
    assert result.optimal
    assert result.witness.to_lists() == [[1, 2], [1, 3], [1, 4], [1, 5]]

    # at n = 2k the star and the triangle tie
    result = oracle_max_family(4, 2, intersecting())
    assert result.max_size == 3
    assert result.witness.to_lists() == [[1, 2], [1, 3], [1, 4]]

    assert oracle_max_family(6, 2, intersecting()).max_size == 5


def test_matching_disjointness_graph():
    # all 2-sets of [4] pair off into three disjoint pairs, and no
    # seventh set keeps every set disjoint from at most one other
    result = oracle_max_family(6, 2, ConstraintSpec(pattern=[1, 2]))
    assert result.max_size == 6
    assert satisfies(result.witness, ConstraintSpec(pattern=[1, 2]))


def test_anchored():
    spec = ConstraintSpec(pattern=[1, 1], must_contain=[[2, 3]])
    result = oracle_max_family(5, 2, spec)
    assert result.max_size == 4
    assert [2, 3] in result.witness.to_lists()

    spec = ConstraintSpec(pattern=[1, 1], must_avoid=[[1, 2], [1, 3]])
    result = oracle_max_family(5, 2, spec)
    assert result.max_size == 4
    assert result.witness.to_lists() == [[1, 4], [2, 4], [3, 4], [4, 5]]


def test_removal_minimum():
    # intersecting families never need a removal
    spec = ConstraintSpec(pattern=[1, 1], removal_min=(2, 1))
    with pytest.raises(Infeasible):
        oracle_max_family(5, 2, spec)

    spec = ConstraintSpec(pattern=[1, 2], removal_min=(2, 1))
    result = oracle_max_family(5, 2, spec)
    assert satisfies(result.witness, spec)


def test_too_large():
    with pytest.raises(TooLarge):
        oracle_max_family(8, 2, intersecting())
    with pytest.raises(TooLarge):
        enumerate_maximal(9, 3, intersecting())


class TestMaximal:
    def test_star_and_triangle(self):
        classes = enumerate_maximal(5, 2, intersecting())
        assert [len(F) for F in classes] == [4, 3]
        assert is_isomorphic(classes[0], star(5, 2))[0]
        assert is_isomorphic(classes[1], hilton_milner_triangle(5, 2))[0]

    def test_tie(self):
        classes = enumerate_maximal(4, 2, intersecting())
        assert [len(F) for F in classes] == [3, 3]

    def test_limit(self):
        with pytest.raises(LimitExceeded):
            enumerate_maximal(5, 2, intersecting(), limit=1)
        assert len(enumerate_maximal(5, 2, intersecting(), limit=2)) == 2

    def test_every_class_is_maximal(self):
        spec = ConstraintSpec(pattern=[1, 2])
        for F in enumerate_maximal(5, 2, spec):
            assert satisfies(F, spec)
            for extra in Family.complete(5, 2):
                if extra in F:
                    continue
                assert not satisfies(F.with_sets([extra]), spec)
