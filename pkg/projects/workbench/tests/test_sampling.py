import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from unionfam.kneser import is_union_intersecting
from unionfam.search import ConstraintSpec
from unionfam.setfam import BadParameters, KSet
from workbench import random_family


def test_random_family_is_seeded():
    F = random_family(10, 3, 20, seed=7)
    assert len(F) == 20
    assert F == random_family(10, 3, 20, seed=7)
    assert F != random_family(10, 3, 20, seed=8)


def test_full_draw():
    assert len(random_family(6, 2, 15, seed=0)) == 15


@given(
    seed=st.integers(0, 2**32 - 1),
    size=st.integers(5, 60),
    t=st.integers(1, 3),
)
@settings(max_examples=25, deadline=None)
def test_repair_removes_pattern(seed, size, t):
    repair = ConstraintSpec(pattern=(1, t))
    F = random_family(10, 3, size, seed, repair=repair)
    assert 1 <= len(F) <= size
    assert is_union_intersecting(F, 1, t)[0]


def test_repair_drops_avoided_sets():
    spec = ConstraintSpec(must_avoid=[[1, 2]])
    F = random_family(4, 2, 6, seed=0, repair=spec)
    assert len(F) == 5
    assert KSet(4, (1, 2)) not in F


@pytest.mark.parametrize(
    "n,k,size,repair",
    [
        (6, 2, 16, None),
        (6, 2, -1, None),
        (6, 7, 1, None),
        (6, 2, 3, ConstraintSpec(pattern=(1, 1), removal_min=(2, 1))),
        (6, 2, 3, ConstraintSpec(must_contain=[[1, 2]])),
    ],
)
def test_bad_draws(n, k, size, repair):
    with pytest.raises(BadParameters):
        random_family(n, k, size, seed=0, repair=repair)
