import pytest

from unionfam.setfam import (
    BadParameters,
    DuplicateSet,
    ElementOutOfRange,
    Family,
    KSet,
    NotAPermutation,
    ParameterMismatch,
    WrongSetSize,
    apply_permutation,
    make_family,
)


def test_kset_mask_round_trip():
    s = KSet(6, (4, 1, 3))
    assert s.elements == (1, 3, 4)
    assert s.mask == 0b1101
    assert KSet.from_mask(6, s.mask) == s
    assert 3 in s and 2 not in s and 7 not in s
    assert str(s) == "{1,3,4}"


def test_kset_validation():
    with pytest.raises(ElementOutOfRange):
        KSet(5, (1, 6))
    with pytest.raises(ElementOutOfRange):
        KSet(5, (0, 1))
    with pytest.raises(WrongSetSize):
        KSet(5, (2, 2))
    with pytest.raises(ElementOutOfRange):
        KSet.from_mask(3, 0b1001)


def test_kset_order_is_lexicographic():
    sets = [KSet(4, e) for e in [(2, 3), (1, 4), (1, 2), (1, 3)]]
    ordered = [s.elements for s in sorted(sets)]
    assert ordered == [(1, 2), (1, 3), (1, 4), (2, 3)]



def test_family_order_is_by_elements_not_masks():
    # {1,4} has the larger mask but the smaller element tuple
    F = make_family(4, 2, [[2, 3], [1, 4]])
    assert F.to_lists() == [[1, 4], [2, 3]]
    assert list(F.masks) == [0b1001, 0b0110]


def test_make_family():
    F = make_family(5, 2, [[1, 3], [1, 2]])
    assert len(F) == 2
    assert F.to_lists() == [[1, 2], [1, 3]]
    assert KSet(5, (1, 3)) in F
    assert F.index(KSet(5, (1, 3))) == 1

    with pytest.raises(DuplicateSet):
        make_family(5, 2, [[1, 2], [2, 1]])
    with pytest.raises(ElementOutOfRange):
        make_family(5, 2, [[1, 6]])
    with pytest.raises(WrongSetSize):
        make_family(5, 2, [[1, 2, 3]])
    with pytest.raises(BadParameters):
        make_family(3, 4, [])


def test_family_algebra():
    F = make_family(4, 2, [[1, 2], [1, 3]])
    G = make_family(4, 2, [[1, 3], [3, 4]])
    assert F.union(G).to_lists() == [[1, 2], [1, 3], [3, 4]]
    assert F.difference(G).to_lists() == [[1, 2]]
    assert F.with_sets([KSet(4, (2, 4))]).to_lists() == [
        [1, 2],
        [1, 3],
        [2, 4],
    ]
    assert F.degrees() == (2, 1, 1, 0)

    with pytest.raises(ParameterMismatch):
        F.union(make_family(5, 2, [[1, 2]]))


def test_complete_family():
    F = Family.complete(5, 2)
    assert len(F) == 10
    assert F.to_lists()[:3] == [[1, 2], [1, 3], [1, 4]]
    assert Family.from_masks(5, 2, reversed(F.masks)) == F


@pytest.mark.parametrize(
    "sets,sigma,expected",
    [
        ([[1, 2], [1, 3]], [1, 2, 3, 4], [[1, 2], [1, 3]]),
        ([[1, 2]], [3, 4, 1, 2], [[3, 4]]),
        ([[1, 2], [3, 4]], [2, 1, 3, 4], [[1, 2], [3, 4]]),
    ],
)
def test_apply_permutation(sets, sigma, expected):
    F = make_family(4, 2, sets)
    assert apply_permutation(F, sigma).to_lists() == expected


def test_apply_permutation_rejects_non_bijections():
    F = make_family(4, 2, [[1, 2]])
    for sigma in ([1, 1, 2, 3], [1, 2, 3], [0, 1, 2, 3], [1, 2, 3, 5]):
        with pytest.raises(NotAPermutation):
            apply_permutation(F, sigma)
