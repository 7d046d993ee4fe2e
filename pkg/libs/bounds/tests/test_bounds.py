import pytest

from unionfam.bounds import (
    BoundQuery,
    GeneralBound,
    available_bounds,
    binomial,
    core_size,
    evaluate_bound,
    hilton_milner_size,
)
from unionfam.setfam import BadParameters


def evaluate(bound, **params):
    return evaluate_bound(BoundQuery(bound, **params))


@pytest.fixture(params=range(10, 21))
def n(request):
    return request.param


@pytest.fixture(params=[3, 4, 5])
def k(request):
    return request.param


def test_examples():
    assert evaluate("ekr", n=10, k=3) == 36
    assert evaluate("hilton-milner", n=10, k=3) == 22
    assert evaluate("hilton-milner-size", n=10, k=3) == 22
    assert evaluate("core-size", n=12, k=4, i=2) == 165 - 56 + 6
    assert evaluate("spine-size", n=10, k=3, i=2) == 18
    assert evaluate("spine-size", n=10, k=3, i=1) == 22
    assert evaluate("third-intersecting", n=10, k=3) == 18
    assert evaluate("union-block", n=20, k=2, s=2, t=2) == 7
    assert evaluate("union-nonstar", n=12, k=3, t=2) == 29
    assert evaluate("interval-family", n=10, k=3, i=1) == 16
    assert evaluate("interval-family", n=10, k=3, i=3) == 8
    assert evaluate("skew-pairs", k=2, l=2) == 6
    assert evaluate("union-removal", n=18, k=3, s=2, t=2, beta=0) == 84


def test_removal_bound_degenerates_to_hilton_milner(n, k):
    value = evaluate("union-removal", n=n, k=k, s=1, t=1, beta=0)
    assert value == hilton_milner_size(n, k)
    assert value == evaluate("hilton-milner-size", n=n, k=k)
    if 2 * k < n:
        assert value == evaluate("hilton-milner", n=n, k=k)


def test_hilton_milner_needs_n_above_2k():
    with pytest.raises(BadParameters):
        evaluate("hilton-milner", n=10, k=5)
    assert evaluate("hilton-milner-size", n=10, k=5) == 126


def test_removal_bound_at_zero_beta_is_block_bound(n, k):
    for s in range(1, 4):
        for t in range(s, 4):
            if s * k + 1 > n:
                continue
            block = evaluate("union-block", n=n, k=k, s=s, t=t)
            removal = evaluate("union-removal", n=n, k=k, s=s, t=t, beta=0)
            assert block == removal


def test_removal_bound_at_one_is_nonstar_bound(n, k):
    for t in range(1, 4):
        removal = evaluate("union-removal", n=n, k=k, s=1, t=t, beta=0)
        assert removal == evaluate("union-nonstar", n=n, k=k, t=t)


def test_single_part_removal_bound_at_t_one(n):
    for k in (5, 6):
        for gamma in range(1, k - 1):
            value = evaluate(
                "union-removal-single", n=n, k=k, t=1, gamma=gamma
            )
            assert value == core_size(n, k, gamma) + gamma


def test_multipartite_bounds_with_two_parts(n, k):
    # with a single fixed star the multipartite bounds reduce to the
    # bipartite ones, since C(n,k) - C(n-1,k) = C(n-1,k-1)
    for s, t in [(2, 2), (2, 3), (3, 3)]:
        if s * k + 1 > n:
            continue
        assert evaluate("multipartite", n=n, k=k, sizes=(t, s)) == evaluate(
            "union-block", n=n, k=k, s=s, t=t
        )
    for beta in range(3):
        value = evaluate(
            "multipartite-removal", n=n, k=k, sizes=(3, 2), beta=beta
        )
        assert value == evaluate(
            "union-removal", n=n, k=k, s=2, t=3, beta=beta
        )
    if k >= 5:
        value = evaluate(
            "multipartite-removal-single", n=n, k=k, sizes=(2, 1), gamma=2
        )
        assert value == evaluate(
            "union-removal-single", n=n, k=k, t=2, gamma=2
        )


def test_chromatic_bound_at_two_colours_is_ekr(n, k):
    value = evaluate("forbidden-chromatic", n=n, k=k, chi=2, eta=1)
    assert value == evaluate("ekr", n=n, k=k)


def test_telescoping(n, k):
    for i in range(1, k):
        difference = core_size(n, k, i - 1) - core_size(n, k, i)
        assert difference == binomial(n - k - i, k - i)


def test_restricted_star_bounds(n, k):
    for s in range(1, 4):
        for beta in range(4):
            upper = evaluate("restricted-star", n=n, k=k, s=s, beta=beta)
            widths = range(0, min(n, (s + beta) * k // (beta + 1) + 1))
            for width in widths:
                lower = evaluate(
                    "restricted-star-lower", n=n, k=k, width=width
                )
                assert lower <= upper

    # the width term only ever shrinks the subtracted binomial
    values = [binomial(n - a - 1, k - 1) for a in range(n)]
    assert all(x >= y for x, y in zip(values, values[1:]))


def test_restricted_star_single_reduces_to_hilton_milner(n, k):
    value = evaluate("restricted-star-single", n=n, k=k, beta=0)
    assert value == hilton_milner_size(n, k) - 1


def test_general_bound():
    # k = s + 2 sits in both branches
    result = evaluate("hilton-milner-general", n=10, k=3, s=1)
    assert isinstance(result, GeneralBound)
    assert result.first_applies and result.second_applies
    assert result.first == result.second == 22
    assert result.value == 22

    result = evaluate("hilton-milner-general", n=12, k=3, s=2)
    assert result.first_applies and not result.second_applies
    assert result.value == result.first == 55 - 36 + 9

    result = evaluate("hilton-milner-general", n=12, k=2, s=1)
    assert not result.first_applies and result.second_applies
    assert result.value == result.second


@pytest.mark.parametrize("ell,expected", [(0, 0), (5, 1), (9, 3), (40, 40)])
def test_disjoint_pairs(ell, expected):
    assert evaluate("disjoint-pairs", k=3, ell=ell) == expected


def test_bad_parameters():
    with pytest.raises(BadParameters, match="Unknown bound"):
        evaluate("nope", n=10, k=3)
    with pytest.raises(BadParameters, match="needs parameter"):
        evaluate("union-removal", n=10, k=3, s=1)
    with pytest.raises(BadParameters, match="gamma <= k - 2"):
        evaluate("union-removal-single", n=20, k=5, t=1, gamma=4)
    with pytest.raises(BadParameters, match="5 <= k"):
        evaluate("union-removal-single", n=20, k=4, t=1, gamma=2)
    with pytest.raises(BadParameters, match="s <= t"):
        evaluate("union-block", n=20, k=2, s=3, t=2)
    with pytest.raises(BadParameters, match="n >= 2k"):
        evaluate("ekr", n=5, k=3)
    with pytest.raises(BadParameters, match="nonincreasing"):
        evaluate("multipartite", n=20, k=3, sizes=(2, 3))
    with pytest.raises(BadParameters, match="last part"):
        evaluate(
            "multipartite-removal-single", n=20, k=5, sizes=(2, 2), gamma=1
        )
    with pytest.raises(BadParameters, match="min"):
        evaluate("hilton-milner-general", n=10, k=2, s=3)


def test_available_bounds():
    names = [info.name for info in available_bounds()]
    assert names == sorted(names)
    assert len(names) == 22
    assert "union-removal" in names
    for info in available_bounds():
        assert info.claim
        assert info.params


def test_query_parameters():
    query = BoundQuery("multipartite", n=10, k=3, sizes=[3, 2])
    assert query.sizes == (3, 2)
    assert query.parameters() == {"n": 10, "k": 3, "sizes": [3, 2]}
