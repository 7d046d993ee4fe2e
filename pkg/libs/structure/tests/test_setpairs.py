from unittest.mock import patch

import pytest

from unionfam.setfam import (
    BadParameters,
    BudgetExceeded,
    SizeMismatch,
    TheoremViolation,
)
from unionfam.structure import (
    SetPairSystem,
    longest_set_pair_system,
    max_set_pair_system,
    verify_set_pair_system,
)


def test_verify():
    S = SetPairSystem.from_lists([([1], [2]), ([2], [1])])
    assert verify_set_pair_system(S, 1, 1)

    S = SetPairSystem.from_lists([([1], [2]), ([2], [1]), ([3], [1])])
    assert not verify_set_pair_system(S, 1, 1)

    S = SetPairSystem.from_lists([([1, 2], [3])])
    assert verify_set_pair_system(S, 2, 1)

    # A_i meets its own B_i
    S = SetPairSystem.from_lists([([1, 2], [2])])
    assert not verify_set_pair_system(S, 2, 1)


def test_size_mismatch():
    S = SetPairSystem.from_lists([([1, 2], [3])])
    with pytest.raises(SizeMismatch):
        verify_set_pair_system(S, 1, 1)


def test_length_bound_is_asserted():
    S = SetPairSystem.from_lists([([1], [2]), ([2], [1])])
    with patch("unionfam.structure.setpairs.binomial", return_value=1):
        with pytest.raises(TheoremViolation):
            verify_set_pair_system(S, 1, 1)


@pytest.mark.parametrize(
    "k,l,ground,expected",
    [(1, 1, 4, 2), (1, 2, 5, 3), (2, 1, 5, 3), (2, 2, 8, 6), (1, 1, 1, 0)],
)
def test_max_set_pair_system(k, l, ground, expected):
    assert max_set_pair_system(k, l, ground) == expected


def test_longest_system_is_valid():
    S = longest_set_pair_system(2, 2, 6)
    assert len(S) == 6
    assert verify_set_pair_system(S, 2, 2)
    for a, b in S.pairs:
        assert a | b <= set(range(1, 7))


def test_complements_on_small_ground():
    # B_i is forced to be the complement of A_i
    assert max_set_pair_system(1, 2, 3) == 3
    S = longest_set_pair_system(1, 2, 3)
    assert all(len(a | b) == 3 for a, b in S.pairs)


def test_errors():
    with pytest.raises(BadParameters):
        max_set_pair_system(0, 1, 4)
    with pytest.raises(BadParameters):
        max_set_pair_system(2, 2, 13)
    with pytest.raises(BudgetExceeded):
        max_set_pair_system(2, 2, 8, budget=3)
