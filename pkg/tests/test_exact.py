from __future__ import annotations

import random

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from alliance_lab import exact, verify
from alliance_lab.errors import BudgetExceeded, InvalidInput
from alliance_lab.exact import Budget
from alliance_lab.graph import Graph, build_family, parse_family

import oracles
from conftest import corpus


def fam(expr: str) -> Graph:
    return build_family(parse_family(expr))


@st.composite
def small_graphs(draw, max_n=9):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return Graph(n, edges)


def test_domination_examples():
    res = exact.domination_number(fam("P3"))
    assert res.value == 1 and res.witness.tolist() == [1]
    assert exact.domination_number(fam("C6")).value == 2
    res = exact.domination_number(fam("S5"))
    assert res.value == 1 and res.witness.tolist() == [0]


@pytest.mark.parametrize("name, value", [("P5", 2), ("C5", 3), ("K5", 3), ("P4", 2),
                                         ("K4", 2), ("Q3", 4), ("S4", 1)])
def test_alliance_examples(name, value):
    res = exact.global_offensive_alliance_number(fam(name))
    assert res.value == value
    assert verify.is_global_offensive_alliance(fam(name), res.witness)


def test_independence_and_bipartite_examples():
    assert exact.independence_number(fam("C6")).value == 3
    assert exact.bipartite_number(fam("C6")).value == 6
    assert exact.independence_number(fam("K4")).value == 1
    assert exact.bipartite_number(fam("K4")).value == 2
    assert exact.bipartite_number(fam("C5")).value == 4


def test_radius_examples():
    assert exact.radius(fam("P4")) == 2
    assert exact.radius(fam("C8")) == 4
    for n in range(2, 7):
        assert exact.radius(fam(f"K{n}")) == 1
    with pytest.raises(InvalidInput):
        exact.radius(Graph(3, [(0, 1)]))


def test_efficient_domination_examples():
    res = exact.find_efficient_dominating_set(fam("C6"))
    assert res is not None and res.witness.tolist() == [0, 3]
    assert res.equals_domination_number
    res = exact.find_efficient_dominating_set(fam("Q3"))
    assert res is not None and res.value == 2
    assert exact.find_efficient_dominating_set(fam("C4")) is None


def test_star_characterization_examples():
    assert exact.star_characterization(fam("S4"))
    assert not exact.star_characterization(fam("P4"))
    assert not exact.star_characterization(fam("C6"))
    with pytest.raises(InvalidInput):
        exact.star_characterization(Graph(3, [(0, 1)]))


def test_budget_abort_brackets_optimum():
    g = fam("K6xK6")
    with pytest.raises(BudgetExceeded) as exc:
        exact.global_offensive_alliance_number(g, budget=Budget(nodes=50))
    lo, hi = exc.value.lo, exc.value.hi
    assert lo is not None and lo <= 18
    assert hi is None or hi >= 18
    with pytest.raises(BudgetExceeded):
        exact.domination_number(fam("P4xP6"), budget=Budget(nodes=3))


def test_order_cap():
    g = build_family(parse_family("P9"))
    with pytest.raises(InvalidInput):
        exact.global_offensive_alliance_number(g, max_order=8)


def test_disconnected_graphs_sum_components():
    g = Graph(7, [(0, 1), (1, 2), (3, 4), (4, 5), (5, 6), (3, 6)])
    assert exact.global_offensive_alliance_number(g).value == 1 + 2
    assert exact.domination_number(g).value == 1 + 2
    lonely = Graph(3, [(0, 1)])
    assert exact.domination_number(lonely).value == 2
    assert exact.global_offensive_alliance_number(lonely).value == 2


@pytest.mark.parametrize("name, g", corpus()[:30], ids=lambda x: x if isinstance(x, str) else "")
def test_strategies_agree(name, g):
    for solver in (exact.domination_number, exact.global_offensive_alliance_number):
        a = solver(g, strategy=exact.BNB)
        b = solver(g, strategy=exact.ENUMERATE)
        assert a.value == b.value
        assert a.witness == b.witness


@settings(max_examples=60, deadline=None)
@given(small_graphs())
def test_solvers_match_brute_force(g):
    adj = oracles.adjacency(g)
    gamma = exact.domination_number(g)
    assert gamma.value == oracles.gamma(g)
    assert oracles.dominating(adj, gamma.witness)
    if g.n:
        goa = exact.global_offensive_alliance_number(g)
        assert (goa.value, tuple(goa.witness)) == oracles.smallest(g, oracles.goa)
        assert exact.degree_counting_floor(g) <= goa.value or g.min_degree == 0
    x = oracles.to_nx(g)
    mis = exact.independence_number(g)
    assert verify.is_independent(g, mis.witness)
    assert mis.value == len(max(nx.find_cliques(nx.complement(x)), key=len, default=[]))
    bip = exact.bipartite_number(g)
    assert nx.is_bipartite(x.subgraph(bip.witness.tolist()))


@settings(max_examples=40, deadline=None)
@given(small_graphs(8))
def test_eds_matches_brute_force(g):
    res = exact.find_efficient_dominating_set(g)
    assert (res is not None) == oracles.has_eds(g)
    if res is not None:
        assert verify.is_efficient_dominating_set(g, res.witness)
        assert res.equals_domination_number == (res.value == oracles.gamma(g))


def test_radius_matches_networkx():
    rng = random.Random(3)
    for _ in range(20):
        g = oracles.random_connected(rng, rng.randint(2, 12), 0.2)
        assert exact.radius(g) == nx.radius(oracles.to_nx(g))


@pytest.mark.parametrize("expr", ["P4xP5", "C4xC4", "K3xK4", "Q4"])
def test_parallel_runs_identical(expr):
    g = fam(expr)
    base = exact.global_offensive_alliance_number(g)
    dom = exact.domination_number(g)
    for w in (2, 4):
        other = exact.global_offensive_alliance_number(g, workers=w)
        assert (other.value, other.witness) == (base.value, base.witness)
        other = exact.domination_number(g, workers=w)
        assert (other.value, other.witness) == (dom.value, dom.witness)


def test_result_serializes():
    d = exact.global_offensive_alliance_number(fam("C5")).to_dict()
    assert d["value"] == 3 and d["quantity"] == exact.GAMMA_O and len(d["witness"]) == 3
