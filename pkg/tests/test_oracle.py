from itertools import combinations, islice

import pytest
from hypothesis import given

from fchromatic.errors import CapacityError, PreconditionError
from fchromatic.graph import ColorBudget, build_graph, validate_spanning_forest
from fchromatic.oracle import (
    InstanceFamily,
    brute_force_forest,
    enumerate_instances,
    extremal_bipartite_max_edges,
    forest_profiles,
    profile_admits,
)

from .conftest import C1, instances


def test_rainbow_tree(het_k22, ones):
    F = brute_force_forest(het_k22, ones(het_k22), 1)
    assert validate_spanning_forest(het_k22, F.edge_ids, ones(het_k22), 1)


def test_lexicographically_first(het_k22, ones):
    # (0,2,c1) and (0,3,c1) clash, so the first valid triple is edges 0, 2, 3
    assert brute_force_forest(het_k22, ones(het_k22), 1).edge_ids == (0, 2, 3)


def test_not_found(mono_k22):
    assert brute_force_forest(mono_k22, ColorBudget({C1: 1}), 1) is None


def test_empty_forest(het_k22, ones):
    assert brute_force_forest(het_k22, ones(het_k22), 4).edge_ids == ()


def test_caps():
    G = build_graph(11, [], {0})
    with pytest.raises(CapacityError):
        brute_force_forest(G, ColorBudget({0: 1}), 1)
    pairs = list(combinations(range(8), 2))[:21]
    G = build_graph(8, [(a, b, 0) for a, b in pairs], {0})
    with pytest.raises(CapacityError):
        brute_force_forest(G, ColorBudget({0: 7}), 1)


@given(inst=instances(max_vertices=6))
def test_matches_plain_enumeration(inst):
    G, f, w = inst
    plain = None
    for S in combinations(range(len(G.edges)), G.vertex_count - w):
        if validate_spanning_forest(G, S, f, w):
            plain = S
            break
    found = brute_force_forest(G, f, w)
    assert (found.edge_ids if found else None) == plain


@given(inst=instances(max_vertices=6))
def test_profiles_agree_with_search(inst):
    G, f, w = inst
    assert profile_admits(forest_profiles(G), G, f, w) == (brute_force_forest(G, f, w) is not None)


class TestExtremal:
    def test_examples(self):
        assert extremal_bipartite_max_edges(5, 2) == 4
        assert extremal_bipartite_max_edges(6, 6) == 0
        assert extremal_bipartite_max_edges(2, 1) == 1

    def test_one_component(self):
        for N in range(1, 31):
            assert extremal_bipartite_max_edges(N, 1) == (N // 2) * ((N + 1) // 2)

    def test_non_increasing_in_s(self):
        for N in range(1, 16):
            values = [extremal_bipartite_max_edges(N, s) for s in range(1, N + 1)]
            assert values == sorted(values, reverse=True)

    def test_range(self):
        with pytest.raises(PreconditionError):
            extremal_bipartite_max_edges(31, 1)
        with pytest.raises(PreconditionError):
            extremal_bipartite_max_edges(3, 0)


class TestEnumeration:
    def test_small_exhaustive(self):
        fam = InstanceFamily(max_vertices=3, max_colors=2, max_cap=1, max_w=1, min_cap=1)
        items = list(enumerate_instances(fam))
        # graphs up to isomorphism: 1 + 2 + 4; colorings up to relabeling
        # with at most two colors: n=1 -> 1, n=2 -> 1+1, n=3 -> 1+1+2+4
        graphs = {(G.vertex_count, tuple(G.edges)) for G, _, _ in items}
        assert len(graphs) == 11
        assert all(f[c] == 1 for _, f, _ in items for c in f)
        assert all(w == 1 for _, _, w in items)

    def test_sampling_deterministic(self):
        fam = InstanceFamily(8, 4, 3, 4, mode="sample", seed=3, trials=50)
        a = [(G, dict(f), w) for G, f, w in enumerate_instances(fam)]
        b = [(G, dict(f), w) for G, f, w in enumerate_instances(fam)]
        assert a == b and len(a) == 50
        assert all(len(G.edges) <= 20 for G, _, _ in a)

    def test_infeasible(self):
        with pytest.raises(CapacityError):
            next(enumerate_instances(InstanceFamily(11, 2, 1, 1)))

    def test_beyond_atlas_is_lazy(self):
        fam = InstanceFamily(8, 1, 0, 1, min_vertices=8)
        assert len(list(islice(enumerate_instances(fam), 5))) == 5
