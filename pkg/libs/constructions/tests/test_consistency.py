from unionfam.bounds import evaluate_bound, spine_size
from unionfam.constructions import ConsistencyGrid, consistency_matrix

GRID = ConsistencyGrid(ns=(10, 11), ks=(3, 4), ts=(1, 2))


def test_everything_agrees():
    ledger = consistency_matrix(GRID)
    assert ledger.counts["fail"] == 0
    assert ledger.exit_code == 0

    ids = set(ledger.check_id)
    for check_id in [
        "spine-size",
        "padded-spine-size",
        "padded-spine-at-one",
        "hilton-milner-size",
        "hilton-milner-triangle",
        "spine-is-hilton-milner",
        "telescoping",
        "general-bound-agreement",
        "removal-degenerates-to-hilton-milner",
        "removal-at-one-is-nonstar",
        "restricted-star-bounds-ordered",
        "block-family-size",
        "interval-family-size",
    ]:
        assert check_id in ids


def test_layered_rows():
    grid = ConsistencyGrid(ns=(12,), ks=(5,), ts=(1,))
    ledger = consistency_matrix(grid)
    assert "layered-spine-size" in set(ledger.check_id)
    assert ledger.counts["fail"] == 0


def test_corrupted_formula_is_caught():
    def corrupted(query):
        return spine_size(query.n, query.k, query.i) + 1

    ledger = consistency_matrix(GRID, overrides={"spine-size": corrupted})
    failed = {
        check_id
        for check_id, verdict in zip(ledger.check_id, ledger.verdict)
        if verdict == "fail"
    }
    assert "spine-size" in failed
    assert ledger.exit_code == 1


def test_identities_cover_wider_range():
    ledger = consistency_matrix(GRID)
    ns = {
        params["n"]
        for check_id, params in zip(ledger.check_id, ledger.parameters)
        if check_id == "removal-degenerates-to-hilton-milner"
    }
    assert ns == set(range(10, 21))


def test_default_grid_has_no_failures():
    ledger = consistency_matrix()
    assert ledger.exit_code == 0

    # the layered family has no room for its blocks at n = 2k
    skipped = [
        params
        for check_id, params, verdict in zip(
            ledger.check_id, ledger.parameters, ledger.verdict
        )
        if check_id == "layered-spine-size" and verdict == "skipped"
    ]
    assert {"n": 10, "k": 5, "i": 1, "t": 2, "r": 2} in skipped


def test_formula_identities_at_k_five():
    grid = ConsistencyGrid(ns=(), ks=(5,), ts=(1, 2), identity_ns=(10, 12))
    ledger = consistency_matrix(grid)
    assert ledger.counts["fail"] == 0

    ids = set(ledger.check_id)
    assert "single-removal-at-one" in ids
    assert "removal-at-one-is-nonstar" in ids
    assert "restricted-star-bounds-ordered" in ids
    assert "spine-size" not in ids


def test_corrupted_nonstar_bound_is_caught():
    def corrupted(query):
        return evaluate_bound(query) + 1

    grid = ConsistencyGrid(ns=(), ks=(3,), ts=(2,), identity_ns=(10,))
    ledger = consistency_matrix(grid, overrides={"union-nonstar": corrupted})
    assert ledger.exit_code == 1
