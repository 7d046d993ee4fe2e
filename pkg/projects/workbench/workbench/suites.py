"""
The checks behind the `construct`, `bound`, `verify` and
`search` commands. Every suite returns a `CheckLedger` and hands
the families worth keeping (constructions, search witnesses and
counterexamples) to `sink`.
"""

import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict
from itertools import combinations
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from unionfam.bounds import (
    BoundQuery,
    GeneralBound,
    binomial,
    bound_info,
    core_size,
    evaluate_bound,
    hilton_milner_size,
    interval_size,
    spine_size,
)
from unionfam.constructions import (
    ConsistencyGrid,
    build_construction,
    consistency_matrix,
    extremal_removal_number,
    hilton_milner_triangle,
    is_maximal_union_intersecting,
    padded_spine_family,
    removal_extremal,
    star,
)
from unionfam.kneser import (
    build_graph,
    is_union_intersecting,
    star_count_bound_holds,
)
from unionfam.report import FAIL, PASS, SKIPPED, CheckLedger
from unionfam.search import (
    ConstraintSpec,
    branch_and_bound_max,
    enumerate_maximal,
    oracle_max_family,
    sweep_restricted_star,
    threshold_scan,
)
from unionfam.setfam import (
    BadParameters,
    BudgetExceeded,
    Family,
    Infeasible,
    TheoremViolation,
    apply_permutation,
    canonical_form,
    is_isomorphic,
)
from unionfam.structure import (
    disjoint_pair_bound_holds,
    is_intersecting,
    max_set_pair_system,
    peel,
    removal_number,
)
from workbench.config import RunConfig
from workbench.sampling import random_family
from workbench.utils import num_workers

Sink = Callable[[Family], None]
Params = Dict[str, Any]


def _require(params: Params, *names: str) -> List[Any]:
    missing = [name for name in names if params.get(name) is None]
    if missing:
        raise BadParameters(
            "Missing parameter(s) {}".format(", ".join(missing))
        )
    return [params[name] for name in names]


def _map(fn: Callable, items: Sequence, workers: int) -> List:
    if workers <= 1 or len(items) < 2:
        return [fn(item) for item in items]
    chunksize = max(1, len(items) // (4 * workers))
    with ProcessPoolExecutor(workers) as executor:
        return list(executor.map(fn, items, chunksize=chunksize))


def _draws(seed: int, count: int, low: int, high: int):
    """Family sizes in [low, high] and per-item seeds, drawn up front"""
    rng = np.random.default_rng(seed)
    sizes = rng.integers(low, high + 1, size=count)
    seeds = rng.integers(0, 2**32, size=count)
    return [(int(a), int(b)) for a, b in zip(sizes, seeds)]


def _tally_reason(first: Optional[int], total: int, what: str) -> str:
    if first is None:
        return f"{total} {what} checked"
    return f"first counterexample at item {first}"


# construct


def _expected_size(name: str, p: Params) -> Optional[int]:
    n, k = p["n"], p["k"]
    if name == "star":
        return binomial(n - 1, k - 1)
    if name == "hilton-milner":
        return hilton_milner_size(n, k)
    if name == "hilton-milner-triangle":
        return 3 * binomial(n - 3, k - 2) + binomial(n - 3, k - 3)
    if name == "spine":
        return spine_size(n, k, p["i"])
    if name == "interval":
        return interval_size(n, k, p["i"])
    if name == "padded-spine":
        return core_size(n, k, p["i"]) + p["i"] * p["t"]
    if name == "block":
        query = BoundQuery("union-block", n=n, k=k, s=p["s"], t=p["t"])
        return evaluate_bound(query)
    if name == "removal-extremal":
        query = BoundQuery(
            "union-removal", n=n, k=k, s=p["s"], t=p["t"], beta=p["beta"]
        )
        return evaluate_bound(query)
    return None


def construct(config: RunConfig, sink: Sink) -> CheckLedger:
    params = dict(config.params)
    if config.budget is not None:
        params.setdefault("budget", config.budget)
    built = build_construction(config.target, **params)
    sink(built.family)

    ledger = CheckLedger()
    provenance = built.provenance()
    try:
        expected = _expected_size(built.name, built.parameters)
    except BadParameters as e:
        expected, reason = None, f"size formula doesn't apply: {e}"
    else:
        reason = "" if expected is not None else "no closed-form size"

    if expected is None:
        ledger.add(
            "construction-size",
            built.claim,
            provenance,
            None,
            len(built.family),
            SKIPPED,
            reason,
        )
    else:
        ledger.add(
            "construction-size",
            built.claim,
            provenance,
            expected,
            len(built.family),
        )
    return ledger


# bound


def bound(config: RunConfig, sink: Sink) -> CheckLedger:
    params = dict(config.params)
    expected = params.pop("expected", None)
    query = BoundQuery(config.target, **params)
    value = evaluate_bound(query)
    if isinstance(value, GeneralBound):
        value = dict(asdict(value), value=value.value)

    ledger = CheckLedger()
    info = bound_info(config.target)
    parameters = dict(query.parameters(), bound=config.target)
    if expected is None:
        ledger.add(
            "bound-value",
            info.claim,
            parameters,
            value,
            value,
            reason="evaluated",
        )
    else:
        ledger.add("bound-value", info.claim, parameters, expected, value)
    return ledger


# verify


def verify_constructions(config: RunConfig, sink: Sink) -> CheckLedger:
    p = config.params
    grid = ConsistencyGrid()
    grid = ConsistencyGrid(
        ns=tuple(p.get("ns", grid.ns)),
        ks=tuple(p.get("ks", grid.ks)),
        ts=tuple(p.get("ts", grid.ts)),
        identity_ns=tuple(p.get("identity_ns", grid.identity_ns)),
    )
    return consistency_matrix(grid)


RESTRICTED_STAR_CASES = (
    (12, 3, 1, 1),
    (12, 3, 1, 2),
    (12, 3, 2, 0),
    (12, 3, 2, 1),
    (12, 4, 1, 1),
    (12, 4, 1, 2),
)


def verify_restricted_star(config: RunConfig, sink: Sink) -> CheckLedger:
    p = config.params
    cases = RESTRICTED_STAR_CASES
    if any(key in p for key in ("n", "k", "s", "beta")):
        case = (p.get("n", 12), p.get("k", 3), p.get("s", 1), p.get("beta", 1))
        cases = [case]
    exhaustive = bool(p.get("exhaustive", False))
    workers = num_workers()

    ledger = CheckLedger()
    for n, k, s, beta in cases:
        logging.info(
            "Sweeping restricted stars for n=%d, k=%d, s=%d, beta=%d",
            n,
            k,
            s,
            beta,
        )
        ledger.append(
            sweep_restricted_star(
                n, k, s, beta, exhaustive, workers, config.budget
            )
        )
    return ledger


PEEL_CHECKS = {
    "peel-trace": "doubled peeling pairs form a skew system and "
    "the rounds and removals obey their bounds",
    "peel-core-intersecting": "the peeled core is intersecting",
    "peel-rounds": "peeling takes at most C(2k-1, k-1) rounds",
    "peel-removed": "peeling removes at most m(t-1) sets",
    "peel-removal-number": "the removal number is at most the "
    "number of sets peeling removed",
    "peel-star-count": "the disjointness graph has at most "
    "(t-1) C(|F|, 1) vertex-neighbour pairs",
}


def _peel_item(item: Tuple[int, int, int, int, int]):
    n, k, t, size, seed = item
    repair = ConstraintSpec(pattern=(1, t))
    F = random_family(n, k, size, seed, repair=repair)

    failed = []
    try:
        peel(F, t, check=True)
    except TheoremViolation:
        failed.append("peel-trace")

    trace = peel(F, t, check=False)
    if not is_intersecting(trace.core):
        failed.append("peel-core-intersecting")
    if trace.m > binomial(2 * k - 1, k - 1):
        failed.append("peel-rounds")
    if len(trace.removed) > trace.m * (t - 1):
        failed.append("peel-removed")
    if removal_number(F).value > len(trace.removed):
        failed.append("peel-removal-number")
    if not star_count_bound_holds(build_graph(F), 1, t):
        failed.append("peel-star-count")
    return failed, F


def verify_peel(config: RunConfig, sink: Sink) -> CheckLedger:
    p = config.params
    n, k = p.get("n", 10), p.get("k", 3)
    ts = tuple(p.get("ts", (2, 3)))
    count = config.count or 1000

    draws = _draws(config.seed, count, 5, 60)
    items = [
        (n, k, ts[i % len(ts)], size, seed)
        for i, (size, seed) in enumerate(draws)
    ]
    logging.info("Peeling %d random families", count)
    results = _map(_peel_item, items, num_workers())

    ledger = CheckLedger()
    for t in ts:
        indices = [i for i, item in enumerate(items) if item[2] == t]
        violations, first = Counter(), {}
        for i in indices:
            failed, F = results[i]
            for check_id in failed:
                violations[check_id] += 1
                first.setdefault(check_id, i)
            if failed:
                sink(F)

        params = {"n": n, "k": k, "t": t, "families": len(indices)}
        params["seed"] = config.seed
        for check_id, claim in PEEL_CHECKS.items():
            ledger.add(
                check_id,
                claim,
                params,
                0,
                violations[check_id],
                reason=_tally_reason(
                    first.get(check_id), len(indices), "families"
                ),
            )
    return ledger


PAIRS_CLAIM = (
    "a family has at least removal^2 / (2 C(2k, k)) disjoint pairs"
)


def _pairs_item(item: Tuple[int, int, int, int, Optional[int]]):
    n, k, size, seed, budget = item
    F = random_family(n, k, size, seed)
    try:
        holds = disjoint_pair_bound_holds(F, budget)
    except BudgetExceeded:
        return SKIPPED, F
    return (PASS if holds else FAIL), F


def verify_pairs_bound(config: RunConfig, sink: Sink) -> CheckLedger:
    p = config.params
    n, k = p.get("n", 10), p.get("k", 3)
    count = config.count or 1000

    items = [
        (n, k, size, seed, config.budget)
        for size, seed in _draws(config.seed, count, 5, 60)
    ]
    logging.info("Checking the disjoint pair bound on %d families", count)
    results = _map(_pairs_item, items, num_workers())

    verdicts = Counter(verdict for verdict, _ in results)
    first = None
    for i, (verdict, F) in enumerate(results):
        if verdict == FAIL:
            sink(F)
            if first is None:
                first = i

    params = {"n": n, "k": k, "families": count, "seed": config.seed}
    ledger = CheckLedger()
    ledger.add(
        "disjoint-pair-bound",
        PAIRS_CLAIM,
        params,
        0,
        verdicts[FAIL],
        reason=_tally_reason(first, count - verdicts[SKIPPED], "families"),
    )
    if verdicts[SKIPPED]:
        ledger.skip_for_budget(
            "disjoint-pair-bound-budget",
            PAIRS_CLAIM,
            dict(params, skipped=verdicts[SKIPPED]),
            0,
            config.budget,
        )
    return ledger


SETPAIR_CASES = ((1, 1, 4), (1, 2, 5), (2, 1, 5), (2, 2, 8))


def verify_setpairs(config: RunConfig, sink: Sink) -> CheckLedger:
    claim = bound_info("skew-pairs").claim
    ledger = CheckLedger()
    for k, l, ground in SETPAIR_CASES:
        params = {"k": k, "l": l, "ground": ground}
        expected = evaluate_bound(BoundQuery("skew-pairs", k=k, l=l))
        try:
            actual = max_set_pair_system(k, l, ground, config.budget)
        except BudgetExceeded as e:
            ledger.skip_for_budget(
                "skew-pairs-maximum", claim, params, expected, e.nodes
            )
            continue
        ledger.add("skew-pairs-maximum", claim, params, expected, actual)
    return ledger


# isomorphism classes of graphs on five vertices by edge count
GRAPHS_ON_FIVE = (1, 1, 2, 4, 6, 6, 6, 4, 2, 1, 1)


def _relabel_holds(F: Family, sigma: Tuple[int, ...]) -> bool:
    G = apply_permutation(F, sigma)
    found, witness = is_isomorphic(F, G)
    if not found or apply_permutation(F, witness) != G:
        return False
    return canonical_form(F).certificate == canonical_form(G).certificate


def _canonical_agreement(n: int, k: int, max_sets: int):
    """
    Compare certificate equality with `is_isomorphic` on every
    pair of equal-size families of k-sets of [n] with at most
    `max_sets` members, and count the classes per size.
    """
    everything = Family.complete(n, k)
    disagreements, classes = 0, []
    for size in range(max_sets + 1):
        families = [
            everything.subfamily(c)
            for c in combinations(range(len(everything)), size)
        ]
        certificates = [canonical_form(F).certificate for F in families]
        classes.append(len(set(certificates)))
        for i, j in combinations(range(len(families)), 2):
            same = certificates[i] == certificates[j]
            if same != is_isomorphic(families[i], families[j])[0]:
                disagreements += 1
    return disagreements, classes


def verify_isomorphism(config: RunConfig, sink: Sink) -> CheckLedger:
    p = config.params
    n, k = p.get("n", 8), p.get("k", 3)
    count = config.count or 500

    rng = np.random.default_rng(config.seed)
    violations, first = 0, None
    for i in range(count):
        size = int(rng.integers(1, 21))
        F = random_family(n, k, size, int(rng.integers(0, 2**32)))
        sigma = tuple(int(x) + 1 for x in rng.permutation(n))
        if not _relabel_holds(F, sigma):
            violations += 1
            first = i if first is None else first
            sink(F)

    ledger = CheckLedger()
    ledger.add(
        "isomorphism-relabeled",
        "a relabeled family is found isomorphic with a valid "
        "permutation and has the same canonical certificate",
        {"n": n, "k": k, "pairs": count, "seed": config.seed},
        0,
        violations,
        reason=_tally_reason(first, count, "pairs"),
    )

    en, ek = p.get("exhaustive_n", 5), p.get("exhaustive_k", 2)
    max_sets = p.get("max_sets", 4)
    logging.info(
        "Comparing canonical forms on families of %d-sets of [%d] "
        "with at most %d members",
        ek,
        en,
        max_sets,
    )
    disagreements, classes = _canonical_agreement(en, ek, max_sets)
    params = {"n": en, "k": ek, "max_sets": max_sets}
    ledger.add(
        "canonical-form-agreement",
        "two families share a canonical certificate exactly "
        "when they are isomorphic",
        params,
        0,
        disagreements,
    )
    if (en, ek) == (5, 2) and max_sets < len(GRAPHS_ON_FIVE):
        ledger.add(
            "canonical-class-count",
            "families of 2-sets of [5] fall into as many classes "
            "as graphs on five vertices",
            params,
            list(GRAPHS_ON_FIVE[: max_sets + 1]),
            classes,
        )
    return ledger


EXTREMAL_CASES = ((18, 3, 1, 1, 0), (18, 3, 1, 2, 0), (18, 3, 2, 2, 0))
PADDED_CASE = (20, 4, 2, 2)
INFEASIBLE_CASE = (20, 3, 3, 4, 5)


def _extremal_checks(
    ledger: CheckLedger,
    F: Family,
    s: int,
    t: int,
    params: Params,
    size: int,
    removal: int,
    budget: Optional[int],
) -> None:
    claim = "the extremal construction is a maximal (s,t)-union "
    claim += "intersecting family with the predicted size and removal number"
    checks = {
        "extremal-union-intersecting": (
            True,
            lambda: is_union_intersecting(F, s, t, budget)[0],
        ),
        "extremal-removal-number": (
            removal,
            lambda: removal_number(F, budget=budget).value,
        ),
        "extremal-size": (size, lambda: len(F)),
        "extremal-maximal": (
            True,
            lambda: is_maximal_union_intersecting(F, s, t, budget),
        ),
    }
    for check_id, (expected, compute) in checks.items():
        try:
            actual = compute()
        except BudgetExceeded as e:
            ledger.skip_for_budget(check_id, claim, params, expected, e.nodes)
            continue
        ledger.add(check_id, claim, params, expected, actual)


def verify_extremal(config: RunConfig, sink: Sink) -> CheckLedger:
    ledger = CheckLedger()
    budget = config.budget
    for n, k, s, t, beta in EXTREMAL_CASES:
        params = {"n": n, "k": k, "s": s, "t": t, "beta": beta}
        logging.info("Building the extremal family for %s", params)
        F = removal_extremal(n, k, s, t, beta, budget)
        sink(F)
        query = BoundQuery("union-removal", **params)
        removal = extremal_removal_number(k, s, t, beta)
        _extremal_checks(
            ledger, F, s, t, params, evaluate_bound(query), removal, budget
        )

    n, k, gamma, t = PADDED_CASE
    params = {"n": n, "k": k, "s": 1, "t": t, "gamma": gamma}
    F = padded_spine_family(n, k, gamma, t)
    sink(F)
    size = core_size(n, k, gamma) + gamma * t
    _extremal_checks(ledger, F, 1, t, params, size, gamma, budget)

    n, k, s, t, beta = INFEASIBLE_CASE
    params = {"n": n, "k": k, "s": s, "t": t, "beta": beta}
    try:
        actual = len(removal_extremal(n, k, s, t, beta, budget))
    except Infeasible:
        actual = "infeasible"
    ledger.add(
        "extremal-infeasible",
        "no anchors exist once the width window is too small",
        params,
        "infeasible",
        actual,
    )
    return ledger


PATTERNS = ((1, 1), (1, 2), (2, 2), (1, 1, 1), (1, 3))
ANCHORS = (
    {"must_contain": ((2, 3),)},
    {"must_avoid": ((1, 2), (1, 3))},
    {"pattern": (1, 2), "must_contain": ((1, 2), (3, 4))},
    {"pattern": (1, 1), "must_avoid": ((1, 2),)},
)


def oracle_cases() -> List[Tuple[int, int, ConstraintSpec]]:
    cases = []
    for n in (4, 5, 6):
        for pattern in PATTERNS:
            for removal in (None, (2, 1)):
                spec = ConstraintSpec(pattern=pattern, removal_min=removal)
                cases.append((n, 2, spec))
        for kwargs in ANCHORS:
            cases.append((n, 2, ConstraintSpec(**kwargs)))
    return cases


def _maximum(fn: Callable, *args) -> Any:
    try:
        return fn(*args).max_size
    except Infeasible:
        return "infeasible"


def verify_oracle(config: RunConfig, sink: Sink) -> CheckLedger:
    ledger = CheckLedger()
    intersecting = ConstraintSpec(pattern=(1, 1))
    for n in (5, 6, 7):
        ledger.add(
            "oracle-ekr",
            "the largest intersecting family of 2-sets of [n] is a star",
            {"n": n, "k": 2},
            binomial(n - 1, 1),
            oracle_max_family(n, 2, intersecting).max_size,
        )

    names = []
    for F in enumerate_maximal(5, 2, intersecting):
        if is_isomorphic(F, star(5, 2))[0]:
            names.append("star")
        elif is_isomorphic(F, hilton_milner_triangle(5, 2))[0]:
            names.append("triangle")
        else:
            names.append("other")
            sink(F)
    ledger.add(
        "oracle-maximal-classes",
        "maximal intersecting families of 2-sets of [5] are the star "
        "and the triangle",
        {"n": 5, "k": 2},
        ["star", "triangle"],
        names,
    )

    for n, k, spec in oracle_cases():
        params = dict(spec.parameters(), n=n, k=k)
        ledger.add(
            "oracle-agreement",
            "branch and bound finds the same maximum as exhaustive "
            "enumeration",
            params,
            _maximum(oracle_max_family, n, k, spec),
            _maximum(branch_and_bound_max, n, k, spec, config.budget),
        )

    ledger.add(
        "oracle-triangle-free",
        "the largest intersecting family of 2-sets of [7] has 6 sets",
        {"n": 7, "k": 2},
        6,
        _maximum(branch_and_bound_max, 7, 2, intersecting, config.budget),
    )
    return ledger


VERIFY_SUITES = {
    "constructions": verify_constructions,
    "restricted-star": verify_restricted_star,
    "peel": verify_peel,
    "pairs-bound": verify_pairs_bound,
    "setpairs": verify_setpairs,
    "isomorphism": verify_isomorphism,
    "extremal": verify_extremal,
    "oracle": verify_oracle,
}


def verify(config: RunConfig, sink: Sink) -> CheckLedger:
    if config.target != "all":
        return VERIFY_SUITES[config.target](config, sink)

    ledger = CheckLedger()
    for name, suite in VERIFY_SUITES.items():
        result = suite(config, sink)
        counts = result.counts
        logging.info(
            "Suite %s: %d passed, %d failed, %d skipped",
            name,
            counts["pass"],
            counts["fail"],
            counts["skipped"],
        )
        ledger.append(result)
    return ledger


# search


def _spec(p: Params) -> ConstraintSpec:
    pattern = p.get("pattern")
    removal = p.get("removal_min")
    return ConstraintSpec(
        pattern=tuple(pattern) if pattern is not None else None,
        removal_min=tuple(removal) if removal is not None else None,
        must_contain=tuple(map(tuple, p.get("must_contain", ()))),
        must_avoid=tuple(map(tuple, p.get("must_avoid", ()))),
    )


SEARCH_CLAIM = "largest family of k-sets of [n] meeting the constraints"


def search_max(config: RunConfig, sink: Sink) -> CheckLedger:
    p = config.params
    n, k = _require(p, "n", "k")
    spec = _spec(p)
    params = dict(spec.parameters(), n=n, k=k)
    expected = p.get("expected")

    ledger = CheckLedger()
    try:
        result = branch_and_bound_max(
            n, k, spec, config.budget, p.get("seconds")
        )
    except Infeasible as e:
        ledger.add(
            "search-max",
            SEARCH_CLAIM,
            params,
            expected,
            "infeasible",
            verdict=None if expected is not None else SKIPPED,
            reason=str(e),
        )
        return ledger

    sink(result.witness)
    params.update(result.to_record())
    params.pop("witness", None)
    if not result.optimal:
        ledger.skip_for_budget(
            "search-max",
            SEARCH_CLAIM,
            params,
            expected,
            result.nodes_explored,
        )
    elif expected is None:
        ledger.add(
            "search-max",
            SEARCH_CLAIM,
            params,
            result.max_size,
            result.max_size,
            reason="optimal",
        )
    else:
        ledger.add(
            "search-max", SEARCH_CLAIM, params, expected, result.max_size
        )
    return ledger


def search_maximal(config: RunConfig, sink: Sink) -> CheckLedger:
    p = config.params
    n, k = _require(p, "n", "k")
    spec = _spec(p)
    classes = enumerate_maximal(n, k, spec, p.get("limit"))
    for F in classes:
        sink(F)

    sizes = [len(F) for F in classes]
    ledger = CheckLedger()
    params = dict(spec.parameters(), n=n, k=k)
    expected = p.get("expected")
    ledger.add(
        "search-maximal",
        "sizes of the maximal families, one per isomorphism class",
        params,
        sizes if expected is None else list(expected),
        sizes,
        reason=f"{len(classes)} classes",
    )
    return ledger


def search_threshold(config: RunConfig, sink: Sink) -> CheckLedger:
    p = config.params
    k, s, t, beta = _require(p, "k", "s", "t", "beta")
    if p.get("ns") is not None:
        ns = list(p["ns"])
    else:
        low, high = _require(p, "n_min", "n_max")
        ns = list(range(low, high + 1))
    scan = threshold_scan(k, s, t, beta, ns, config.budget)
    logging.info("Bound first attained at n=%s", scan.first_match)
    return scan.ledger


SEARCHES = {
    "max": search_max,
    "maximal": search_maximal,
    "threshold": search_threshold,
}


def search(config: RunConfig, sink: Sink) -> CheckLedger:
    return SEARCHES[config.target](config, sink)
