import pytest

from unionfam.bounds import BoundQuery, evaluate_bound
from unionfam.constructions import (
    extremal_anchors,
    extremal_removal_number,
    hilton_milner,
    is_maximal_union_intersecting,
    removal_extremal,
    star,
)
from unionfam.kneser import is_union_intersecting
from unionfam.setfam import (
    BadParameters,
    BudgetExceeded,
    Family,
    Infeasible,
    is_isomorphic,
    make_family,
)
from unionfam.structure import removal_number


def removal_bound(n, k, s, t, beta):
    query = BoundQuery("union-removal", n=n, k=k, s=s, t=t, beta=beta)
    return evaluate_bound(query)


def test_hilton_milner_case():
    F = removal_extremal(10, 3, 1, 1, 0)
    assert len(F) == 22
    assert is_isomorphic(F, hilton_milner(10, 3))[0]


@pytest.mark.parametrize(
    "n,k,s,t,beta,removal",
    [(18, 3, 1, 1, 0, 0), (18, 3, 1, 2, 0, 1), (18, 3, 2, 2, 0, 2)],
)
def test_attains_removal_bound(n, k, s, t, beta, removal):
    F = removal_extremal(n, k, s, t, beta)
    assert len(F) == removal_bound(n, k, s, t, beta)
    assert is_union_intersecting(F, s, t)[0]
    assert removal_number(F).value == removal
    assert extremal_removal_number(k, s, t, beta) == removal


def test_intersecting_case_needs_no_removals():
    # (1,1)-union intersecting is intersecting, whatever beta is
    assert extremal_removal_number(3, 1, 1, 0) == 0
    assert extremal_removal_number(5, 1, 1, 2) == 0
    assert extremal_removal_number(3, 1, 2, 0) == 1
    assert extremal_removal_number(3, 2, 2, 0) == 2


def test_anchors():
    found = extremal_anchors(18, 3, 2, 2, 0)
    assert [list(a) for a in found.anchors] == [[2, 3, 4], [5, 6, 7]]
    assert len(found.extras) == 1
    assert 1 in found.extras[0]


def test_no_anchors_exist():
    # 8 distinct 3-sets can't have a union of only 4 elements
    with pytest.raises(Infeasible):
        removal_extremal(12, 3, 3, 3, 5)
    with pytest.raises(Infeasible):
        extremal_anchors(20, 3, 3, 4, 5)


def test_errors():
    with pytest.raises(BadParameters):
        removal_extremal(12, 2, 1, 1, 0)
    with pytest.raises(BadParameters):
        removal_extremal(12, 3, 2, 1, 0)
    with pytest.raises(BudgetExceeded):
        removal_extremal(18, 3, 2, 2, 0, budget=1)


class TestMaximality:
    def test_intersecting(self):
        assert is_maximal_union_intersecting(star(6, 2), 1, 1)
        triangle = make_family(5, 2, [[1, 2], [1, 3], [2, 3]])
        assert is_maximal_union_intersecting(triangle, 1, 1)

        smaller = Family.from_masks(6, 2, star(6, 2).masks[1:])
        assert not is_maximal_union_intersecting(smaller, 1, 1)

        matching = make_family(4, 2, [[1, 2], [3, 4]])
        assert not is_maximal_union_intersecting(matching, 1, 1)

    def test_extremal_family_is_maximal(self):
        F = removal_extremal(10, 3, 1, 2, 0)
        assert is_maximal_union_intersecting(F, 1, 2)
