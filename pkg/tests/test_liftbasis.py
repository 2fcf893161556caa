import itertools
import random

import pytest

from hamtg.gf2 import Gf2Basis, rank
from hamtg.liftbasis import (
    Lift,
    base_basis,
    build_basis,
    lift_edge,
    lift_perm,
    lifted_edge_range,
    unlift_edge,
    unlift_perm,
)
from hamtg.permvec import pair_indicator
from hamtg.timegraph import (
    Edge,
    OracleScaleError,
    all_permutations,
    edge_space_size,
    is_incident,
)

from helpers import in_span_oracle


# ---------------------------------------------------------------------------
# lifts

def test_canonical_table_skips_anchor():
    lift = Lift.canonical(4, 2)
    assert lift.table == (1, 3, 4)


def test_lift_rejects_bad_table():
    with pytest.raises(ValueError):
        Lift(4, 2, (1, 3, 3))
    with pytest.raises(ValueError):
        Lift(4, 5, (1, 2, 3))


def test_lift_perm_example():
    lift = Lift.canonical(4, 2)
    assert lift_perm(lift, (1, 2, 3)) == (2, 1, 3, 4)


def test_lift_perm_identity_anchor_one():
    for n in (3, 4, 5):
        lift = Lift.canonical(n, 1)
        assert lift_perm(lift, tuple(range(1, n))) == tuple(range(1, n + 1))


@pytest.mark.parametrize("n", [3, 4, 5])
def test_lift_perm_bijection_onto_anchor_class(n):
    for anchor in range(1, n + 1):
        lift = Lift.canonical(n, anchor)
        images = {lift_perm(lift, p) for p in all_permutations(n - 1)}
        expected = {p for p in all_permutations(n) if p[0] == anchor}
        assert images == expected  # injective with the right image
        for p in all_permutations(n - 1):
            assert unlift_perm(lift, lift_perm(lift, p)) == p


def test_lift_edge_example():
    lift = Lift.canonical(4, 2)
    assert lift_edge(lift, Edge(1, 3, 1)) == Edge(1, 4, 2)
    assert unlift_edge(lift, Edge(1, 4, 2)) == Edge(1, 3, 1)


@pytest.mark.parametrize("n", range(3, 8))
def test_lift_edge_bijection(n):
    lift = Lift.canonical(n, min(2, n))
    domain = [
        Edge(i, j, t)
        for t in range(1, n - 1)
        for i in range(1, n)
        for j in range(1, n)
    ]
    assert len(domain) == edge_space_size(n - 1)
    images = {lift_edge(lift, e) for e in domain}
    assert len(images) == (n - 1) ** 2 * (n - 2)
    assert images == set(lifted_edge_range(lift))


def test_unlift_edge_rejects_out_of_range():
    lift = Lift.canonical(4, 2)
    with pytest.raises(ValueError):
        unlift_edge(lift, Edge(1, 3, 1))  # layer 1 is never hit
    with pytest.raises(ValueError):
        unlift_edge(lift, Edge(2, 3, 2))  # anchor endpoint


def test_incidence_transport_exhaustive_order4():
    n = 4
    for anchor in range(1, n + 1):
        lift = Lift.canonical(n, anchor)
        for p in all_permutations(n - 1):
            q = lift_perm(lift, p)
            for e in (
                Edge(i, j, t)
                for t in range(1, n - 1)
                for i in range(1, n)
                for j in range(1, n)
            ):
                assert is_incident(e, p) == is_incident(lift_edge(lift, e), q)


def test_pair_entry_transport_exhaustive_order4():
    n = 4
    edges3 = [
        Edge(i, j, t) for t in (1, 2) for i in (1, 2, 3) for j in (1, 2, 3)
    ]
    for anchor in range(1, n + 1):
        lift = Lift.canonical(n, anchor)
        for p in all_permutations(3):
            small = pair_indicator(p)
            big = pair_indicator(lift_perm(lift, p))
            for e, e2 in itertools.product(edges3, repeat=2):
                assert small.get(e, e2) == big.get(
                    lift_edge(lift, e), lift_edge(lift, e2)
                )


def test_pair_entry_transport_sampled_order5():
    rng = random.Random(12)
    n = 5
    edges4 = [
        Edge(i, j, t) for t in (1, 2, 3) for i in range(1, 5) for j in range(1, 5)
    ]
    perms = all_permutations(4)
    for _ in range(30):
        anchor = rng.randrange(1, n + 1)
        lift = Lift.canonical(n, anchor)
        p = perms[rng.randrange(len(perms))]
        small = pair_indicator(p)
        big = pair_indicator(lift_perm(lift, p))
        for _ in range(40):
            e = edges4[rng.randrange(len(edges4))]
            e2 = edges4[rng.randrange(len(edges4))]
            assert small.get(e, e2) == big.get(
                lift_edge(lift, e), lift_edge(lift, e2)
            )


def test_linear_relations_transport_through_lifts():
    # a dependency among pair indicators at one order lifts bit-exactly
    n_small = 4
    basis_perms = build_basis(n_small)
    basis_vecs = Gf2Basis(edge_space_size(n_small) ** 2)
    for p in basis_perms:
        basis_vecs.insert(pair_indicator(p).bits)
    rng = random.Random(6)
    sample = random.Random(7).sample(all_permutations(n_small), 8)
    for p in sample:
        combo = basis_vecs.coords(pair_indicator(p).bits)
        assert combo is not None
        anchor = rng.randrange(1, n_small + 2)
        lift = Lift.canonical(n_small + 1, anchor)
        lifted = pair_indicator(lift_perm(lift, p))
        back = lifted
        for k in combo:
            back = back ^ pair_indicator(lift_perm(lift, basis_perms[k]))
        assert back.is_zero()


# ---------------------------------------------------------------------------
# base cases and the recursion

def test_base_basis_order1():
    assert base_basis(1) == [(1,)]


def test_base_basis_order2():
    assert base_basis(2) == [(1, 2), (2, 1)]


def test_base_basis_order3_is_full_rank():
    perms = base_basis(3)
    brute = rank([pair_indicator(p).bits for p in all_permutations(3)])
    assert len(perms) == brute == 6


def test_base_basis_range():
    with pytest.raises(ValueError):
        base_basis(4)
    with pytest.raises(ValueError):
        base_basis(0)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_build_basis_size_matches_bruteforce_rank(n):
    perms = build_basis(n)
    brute = rank([pair_indicator(p).bits for p in all_permutations(n)])
    assert len(perms) == brute


@pytest.mark.parametrize("n", [3, 4])
def test_build_basis_spans_all_indicators(n):
    basis_bits = [pair_indicator(p).bits.bits for p in build_basis(n)]
    ncols = edge_space_size(n) ** 2
    for p in all_permutations(n):
        assert in_span_oracle(pair_indicator(p).bits.bits, basis_bits, ncols)


def test_build_basis_cap():
    with pytest.raises(OracleScaleError):
        build_basis(7)
    with pytest.raises(ValueError):
        build_basis(0)


def test_build_basis_cache_roundtrip(tmp_path):
    first = build_basis(4, cache_dir=str(tmp_path))
    cache_file = tmp_path / "pair_basis_n4.json"
    assert cache_file.exists()
    stamp = cache_file.read_bytes()
    second = build_basis(4, cache_dir=str(tmp_path))
    assert second == first
    assert cache_file.read_bytes() == stamp


def test_build_basis_cache_env(tmp_path, monkeypatch):
    monkeypatch.setenv("HAMTG_CACHE_DIR", str(tmp_path))
    build_basis(3)
    assert (tmp_path / "pair_basis_n3.json").exists()
