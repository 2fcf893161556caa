import io
import json
import random

import pytest

from hamtg.canonical import build_canonical_basis
from hamtg.gf2 import rank
from hamtg.lab import (
    check_conjecture1,
    check_conjecture2,
    crossval,
    dimension_table,
    random_time_graph,
    replay_report,
    run_campaign,
    sample_incident_combination,
    supported_subspace,
)
from hamtg.liftbasis import build_basis
from hamtg.permvec import (
    PairVector,
    is_supported_in,
    pair_indicator,
)
from hamtg.timegraph import (
    TimeGraph,
    all_permutations,
    incident_permutations,
)


# ---------------------------------------------------------------------------
# supported subspace

def test_supported_subspace_of_complete_graph_is_everything():
    n = 3
    perms = build_basis(n)
    vectors = supported_subspace(TimeGraph.complete(n), perms)
    assert len(vectors) == len(perms)  # no constraints at all


@pytest.mark.parametrize("n", [3, 4])
def test_supported_subspace_contains_incident_combinations(n):
    from hamtg.gf2 import Gf2Basis
    from hamtg.timegraph import edge_space_size

    rng = random.Random(n)
    perms = build_basis(n)
    for _ in range(3):
        G = random_time_graph(n, rng)
        vecs = supported_subspace(G, perms)
        for v in vecs:
            assert is_supported_in(v, G)
        # every xor-combination of incident indicators lies in the span;
        # singletons exhaustively (combinations follow by linearity), plus
        # a sample of larger subsets
        span = Gf2Basis(edge_space_size(n) ** 2)
        for v in vecs:
            span.insert(v.bits)
        incident = incident_permutations(G)
        for p in incident:
            assert span.contains(pair_indicator(p).bits)
        for _ in range(10):
            g = PairVector.zero(n)
            for p in incident:
                if rng.randrange(2):
                    g = g ^ pair_indicator(p)
            if not g.is_zero():
                assert span.contains(g.bits)


def test_supported_subspace_of_empty_graph_has_no_value_one_element():
    n = 3
    perms = build_basis(n)
    vectors = supported_subspace(TimeGraph.empty(n), perms)
    from hamtg.permvec import value_pair

    # the span of these basis vectors contains no element of value 1 iff
    # every basis vector has value 0
    assert all(value_pair(v) == 0 for v in vectors)


# ---------------------------------------------------------------------------
# conjecture checks

def _instance(n, seed):
    rng = random.Random(seed)
    G = random_time_graph(n, rng)
    order = G.complement_indices()
    rng.shuffle(order)
    cb = build_canonical_basis(G, order=order)
    return rng, G, cb


def test_conjecture1_zero_vector_holds_or_vacuous():
    _, G, cb = _instance(4, 1)
    rep = check_conjecture1(cb, PairVector.zero(4))
    assert rep.verdict in ("holds", "vacuous")
    assert rep.witness["failing_m"] == []


def test_conjecture1_vacuous_when_complement_small():
    n = 3
    G = TimeGraph.complete(n)
    cb = build_canonical_basis(G)
    rep = check_conjecture1(cb, pair_indicator((1, 2, 3)))
    assert rep.verdict == "vacuous"


def test_conjecture2_vacuous_on_zero_decomposition():
    _, G, cb = _instance(4, 2)
    rep = check_conjecture2(cb, PairVector.zero(4), basis_perms=build_basis(4))
    assert rep.verdict == "vacuous"
    assert rep.witness["j"] is None


def test_conjecture2_holds_on_incident_indicator():
    # g built from a permutation incident on G witnesses its own feasibility
    rng = random.Random(5)
    while True:
        G = random_time_graph(4, rng)
        incident = incident_permutations(G)
        if incident:
            break
    cb = build_canonical_basis(G)
    g = pair_indicator(incident[0])
    rep = check_conjecture2(cb, g, basis_perms=build_basis(4))
    assert rep.verdict in ("holds", "vacuous")


def test_checks_reject_unsupported_vector():
    n = 3
    G = TimeGraph.empty(n)
    cb = build_canonical_basis(G)
    g = pair_indicator((1, 2, 3))
    with pytest.raises(ValueError):
        check_conjecture1(cb, g)
    with pytest.raises(ValueError):
        check_conjecture2(cb, g, basis_perms=build_basis(n))


def test_conjecture2_all_trailing_flag():
    rng, G, cb = _instance(4, 3)
    g = sample_incident_combination(G, rng)
    rep = check_conjecture2(
        cb, g, basis_perms=build_basis(4), all_trailing=True
    )
    if rep.verdict != "vacuous":
        assert "trailing" in rep.witness
        assert rep.witness["trailing"][0]["j"] == rep.witness["j"]


# ---------------------------------------------------------------------------
# campaigns

def test_campaign_runs_and_replays():
    sink = io.StringIO()
    out = run_campaign(4, trials=12, seed=99, sink=sink)
    counts = out["summary"]["counts"]
    assert sum(counts.values()) == out["summary"]["reports"] == 24
    for rep in out["reports"]:
        assert replay_report(rep.to_dict())
    lines = sink.getvalue().splitlines()
    assert len(lines) == 25  # one per report plus the summary line
    assert "summary" in json.loads(lines[-1])


def test_campaign_is_deterministic():
    a, b = io.StringIO(), io.StringIO()
    run_campaign(4, trials=6, seed=5, sink=a)
    run_campaign(4, trials=6, seed=5, sink=b)
    assert a.getvalue() == b.getvalue()


def test_campaign_multiple_orders():
    out = run_campaign(4, trials=4, seed=2, orders=2, conjectures=(1,))
    assert out["summary"]["reports"] == 8
    by_trial = {}
    for rep in out["reports"]:
        by_trial.setdefault(rep.instance_id.split("-o")[0], []).append(rep)
    for reps in by_trial.values():
        assert len(reps) == 2
        assert {rep.instance_id.split("-")[2] for rep in reps} == {"o0", "o1"}
        # both enumerations cover the same complement
        assert len({tuple(sorted(rep.complement_order)) for rep in reps}) == 1


def test_campaign_with_basis_seed_replays():
    out = run_campaign(4, trials=4, seed=8, basis_seed=3, conjectures=(1,))
    for rep in out["reports"]:
        assert rep.basis_seed is not None
        assert replay_report(rep.to_dict())


# ---------------------------------------------------------------------------
# cross-validation

def test_crossval_exhaustive_order3():
    result = crossval(3)
    assert result["graphs"] == 8
    assert result["false_negative_count"] == 0
    assert result["agree_yes"] + result["agree_no"] + result[
        "false_positive_count"
    ] + result["false_negative_count"] == 8


def test_crossval_random_is_deterministic():
    a = crossval(4, exhaustive=False, random_count=10, seed=6)
    b = crossval(4, exhaustive=False, random_count=10, seed=6)
    assert a == b


def test_crossval_requires_count_for_random():
    with pytest.raises(ValueError):
        crossval(4, exhaustive=False)


# ---------------------------------------------------------------------------
# dimensions

def test_dimension_table_edge_counts():
    table = dimension_table(5)
    assert [row["edges"] for row in table] == [4, 18, 48, 100]
    assert table[0]["dim_edge_span"] == 2


def test_dimension_table_basis_consistency():
    for row in dimension_table(5):
        if row["dim_pair_span"] is not None:
            assert row["consistent"]
            assert row["lift_basis_size"] == row["dim_pair_span"]


def test_dimension_table_matches_bruteforce():
    table = dimension_table(4)
    perms = all_permutations(4)
    from hamtg.permvec import edge_indicator

    assert table[-1]["dim_edge_span"] == rank(
        [edge_indicator(p).bits for p in perms]
    )
    assert table[-1]["dim_pair_span"] == rank(
        [pair_indicator(p).bits for p in perms]
    )


# ---------------------------------------------------------------------------
# report serialization

def test_report_json_is_deterministic_and_replayable():
    out = run_campaign(4, trials=3, seed=4)
    for rep in out["reports"]:
        blob = rep.to_json()
        data = json.loads(blob)
        assert json.dumps(data, sort_keys=True, separators=(",", ":")) == blob
        assert "timing_ms" not in data
        assert replay_report(data)
    timed = out["reports"][0].to_json(include_timing=True)
    assert "timing_ms" in json.loads(timed)
