import json
from itertools import combinations

import pytest
from hypothesis import given

from fchromatic.certify import (
    Certificate,
    Verdict,
    check_forest_condition,
    check_heterochromatic_tree,
    check_rainbow_forest,
)
from fchromatic.errors import BudgetError, CapacityError, PreconditionError
from fchromatic.graph import ColorBudget, build_graph, is_f_chromatic, validate_spanning_forest
from fchromatic.oracle import brute_force_forest

from .conftest import C1, instances


def test_heterochromatic_k22_satisfied(het_k22, ones):
    cert = check_forest_condition(het_k22, ones(het_k22), 1)
    assert cert.verdict is Verdict.SATISFIED
    assert brute_force_forest(het_k22, ones(het_k22), 1) is not None


def test_monochromatic_k22_violated(mono_k22):
    cert = check_forest_condition(mono_k22, ColorBudget({C1: 1}), 1)
    assert cert == Certificate(Verdict.VIOLATED, frozenset({C1}), 4, 2)
    assert cert.recheck(mono_k22, ColorBudget({C1: 1}), 1)


def test_slack_budget_reduces_to_connectivity(het_k22):
    slack = ColorBudget.uniform(het_k22.colors, len(het_k22.edges))
    assert check_forest_condition(het_k22, slack, 1).satisfied
    split = build_graph(4, [(0, 1, 0), (2, 3, 0)], {0})
    cert = check_forest_condition(split, ColorBudget({0: 2}), 1)
    assert cert.violating_set == frozenset() and cert.observed_components == 2 and cert.bound == 1


def test_witness_attached(het_k22, ones):
    cert = check_forest_condition(het_k22, ones(het_k22), 1, witness=True)
    assert validate_spanning_forest(het_k22, cert.witness.edge_ids, ones(het_k22), 1)


def test_json(het_k22, mono_k22, ones):
    out = json.loads(check_forest_condition(mono_k22, ones(mono_k22), 1).to_json(mono_k22))
    assert out == {"verdict": "violated", "violating_colors": ["c1"], "omega": 4, "bound": 2}
    out = json.loads(check_forest_condition(het_k22, ones(het_k22), 1, witness=True).to_json(het_k22))
    assert out["verdict"] == "satisfied" and "omega" not in out and len(out["witness_edges"]) == 3


def test_preconditions(het_k22, ones):
    with pytest.raises(PreconditionError):
        check_forest_condition(het_k22, ones(het_k22), 0)
    with pytest.raises(PreconditionError):
        check_forest_condition(het_k22, ones(het_k22), 5)
    with pytest.raises(BudgetError):
        check_forest_condition(het_k22, ColorBudget({C1: 1}), 1)


def test_capacity_cap():
    G = build_graph(2, [(0, 1, 0)], range(25))
    with pytest.raises(CapacityError):
        check_forest_condition(G, ColorBudget.uniform(G.colors, 1), 1)


class TestHeterochromaticTree:
    def test_examples(self, het_k22, mono_k22):
        assert check_heterochromatic_tree(het_k22).satisfied
        cert = check_heterochromatic_tree(mono_k22)
        assert cert.violating_set == frozenset({C1})

    def test_single_edge(self):
        G = build_graph(2, [(0, 1, 0)], {0})
        cert = check_heterochromatic_tree(G, witness=True)
        assert cert.satisfied and cert.witness.edge_ids == (0,)


class TestJinLi:
    def test_examples(self, het_k22, mono_k22):
        assert check_rainbow_forest(mono_k22, 1).satisfied
        assert not check_rainbow_forest(mono_k22, 2).satisfied
        assert check_rainbow_forest(het_k22, 3).satisfied

    def test_monochromatic_k2_by_enumeration(self, mono_k22):
        # every 2-edge forest uses c1 twice
        for S in combinations(mono_k22.edges, 2):
            assert not is_f_chromatic(mono_k22.with_edges(S), ColorBudget({C1: 1}))

    def test_rejects_disconnected(self):
        G = build_graph(4, [(0, 1, 0), (2, 3, 1)], {0, 1})
        with pytest.raises(PreconditionError):
            check_rainbow_forest(G, 1)

    def test_k_range(self, het_k22):
        with pytest.raises(PreconditionError):
            check_rainbow_forest(het_k22, 4)


@given(inst=instances(max_vertices=6))
def test_matches_brute_force_and_rechecks(inst):
    G, f, w = inst
    cert = check_forest_condition(G, f, w)
    assert cert.satisfied == (brute_force_forest(G, f, w) is not None)
    if not cert.satisfied:
        assert cert.recheck(G, f, w)
        assert cert.observed_components > cert.bound


@given(inst=instances())
def test_specialization_consistency(inst):
    G, _, _ = inst
    assert check_heterochromatic_tree(G).verdict == check_forest_condition(G, ColorBudget.uniform(G.colors, 1), 1).verdict


@given(inst=instances())
def test_monotone_in_budget(inst):
    G, f, w = inst
    if check_forest_condition(G, f, w).satisfied:
        bigger = ColorBudget({c: f[c] + (i % 2) for i, c in enumerate(G.colors)})
        assert check_forest_condition(G, bigger, w).satisfied


@given(inst=instances())
def test_monotone_in_w(inst):
    G, f, w = inst
    if check_forest_condition(G, f, w).satisfied:
        for w2 in range(w, G.vertex_count + 1):
            assert check_forest_condition(G, f, w2).satisfied


@given(inst=instances())
def test_smallest_violating_set_first(inst):
    G, f, w = inst
    cert = check_forest_condition(G, f, w)
    if cert.satisfied:
        return
    # no strictly smaller subset violates
    from fchromatic.graph import omega, remove_colors
    for size in range(len(cert.violating_set)):
        for R in combinations(G.colors, size):
            assert omega(remove_colors(G, R)) <= w + sum(f[c] for c in R)
