from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from alliance_lab import exact, verify
from alliance_lab.errors import InvalidInput
from alliance_lab.graph import Graph, VertexSet, build_family, parse_family

import oracles


def fam(expr: str) -> Graph:
    return build_family(parse_family(expr))


@st.composite
def graph_and_set(draw, max_n=9):
    n = draw(st.integers(2, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True))
    members = draw(st.sets(st.integers(0, n - 1), min_size=1))
    return Graph(n, edges), sorted(members)


def test_boundary_degrees():
    assert verify.boundary_degrees(fam("C4"), [0, 2], 1) == (2, 0)
    assert verify.boundary_degrees(fam("K4"), [0], 1) == (1, 2)
    g = fam("P5")
    for v in range(5):
        assert verify.boundary_degrees(g, [], v) == (0, g.degree(v))


def test_dominating_examples():
    assert verify.is_dominating_set(fam("P3"), [1])
    cert = verify.is_dominating_set(fam("P3"), [0])
    assert not cert and (cert.vertex, cert.inside, cert.outside) == (2, 0, 1)
    assert verify.is_dominating_set(fam("C6"), [0, 3])


def test_alliance_examples():
    assert verify.is_global_offensive_alliance(fam("P4"), [1, 2])
    cert = verify.is_global_offensive_alliance(fam("C5"), [0, 2])
    assert not cert and cert.vertex in (3, 4)
    assert (cert.inside, cert.outside) == (1, 1)
    for name in ("P4", "C5", "K4", "Q3"):
        g = fam(name)
        assert verify.is_global_offensive_alliance(g, range(g.n))


def test_empty_alliance_is_invalid_input():
    with pytest.raises(InvalidInput):
        verify.is_global_offensive_alliance(fam("P3"), [])
    with pytest.raises(InvalidInput):
        verify.is_global_strong_offensive_alliance(fam("P3"), [])


def test_strong_examples():
    assert verify.is_global_strong_offensive_alliance(fam("C5"), [0, 2])
    assert verify.is_global_strong_offensive_alliance(fam("P2"), [0])
    assert verify.is_global_strong_offensive_alliance(fam("K3"), [0])


def test_efficient_examples():
    assert verify.is_efficient_dominating_set(fam("P3"), [1])
    assert verify.is_efficient_dominating_set(fam("C6"), [0, 3])
    cert = verify.is_efficient_dominating_set(fam("C4"), [0, 2])
    assert not cert and cert.vertex in (1, 3)


def test_partition_examples():
    assert verify.check_partition(fam("P4"), [[0, 2], [1, 3]], verify.BOTH_GOA)
    c5 = fam("C5")
    assert verify.check_partition(c5, [[0, 2, 4], [1, 3]], verify.GOA_PLUS_STRONG)
    cert = verify.check_partition(c5, [[0, 2, 4], [1, 3]], verify.BOTH_GOA)
    assert not cert and "part 2" in cert.reason
    # {1, 3} fails at 0 and at 4, each with one neighbour on either side
    assert cert.vertex in (0, 4) and (cert.inside, cert.outside) == (1, 1)


@pytest.mark.parametrize("parts", [
    [[0, 1], [1, 2, 3]],          # overlap
    [[0, 1], [2]],                # misses a vertex
    [[0, 1, 2, 3], []],           # empty part
    [[0], [1], [2, 3]],           # three parts
])
def test_partition_rejects_non_partitions(parts):
    with pytest.raises(InvalidInput):
        verify.check_partition(fam("P4"), parts, verify.BOTH_GOA)


def test_square_counts():
    assert len(list(verify.enumerate_squares(fam("P2xP2")))) == 1
    assert len(list(verify.enumerate_squares(fam("C4xC4")))) == 16


def test_square_lemma_on_optimal_grid_set():
    pg = fam("P4xP4")
    res = exact.global_offensive_alliance_number(pg)
    assert res.value == 8
    assert verify.check_square_lemma(pg, res.witness)


def test_square_lemma_reports_square():
    pg = fam("P3xP3")
    cert = verify.check_square_lemma(pg, [0])
    assert not cert and cert.square is not None and len(cert.square) == 4


def test_square_lemma_rejects_other_factors():
    with pytest.raises(InvalidInput):
        verify.check_square_lemma(fam("K4xP3"), [0])


@settings(max_examples=200, deadline=None)
@given(graph_and_set())
def test_verifiers_match_definitions(case):
    g, s = case
    adj = oracles.adjacency(g)
    assert bool(verify.is_global_offensive_alliance(g, s)) == oracles.goa(adj, s)
    assert bool(verify.is_global_strong_offensive_alliance(g, s)) == oracles.strong_goa(adj, s)
    assert bool(verify.is_dominating_set(g, s)) == oracles.dominating(adj, s)
    assert bool(verify.is_efficient_dominating_set(g, s)) == oracles.efficient(adj, s)


@settings(max_examples=200, deadline=None)
@given(graph_and_set())
def test_alliance_implications(case):
    g, s = case
    if verify.is_global_offensive_alliance(g, s):
        assert verify.is_global_strong_offensive_alliance(g, s)
        assert verify.is_dominating_set(g, s)
        # supersets stay alliances
        bigger = VertexSet.of(g.n, s).mask | 1 << (g.n - 1)
        assert verify.is_global_offensive_alliance(g, VertexSet(g.n, bigger))


@settings(max_examples=100, deadline=None)
@given(graph_and_set())
def test_failure_witness_is_genuine(case):
    g, s = case
    cert = verify.is_global_offensive_alliance(g, s)
    if not cert:
        assert cert.vertex not in s
        assert (cert.inside, cert.outside) == verify.boundary_degrees(g, s, cert.vertex)
        assert cert.inside <= cert.outside
