from __future__ import annotations

import pickle

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from alliance_lab.errors import InvalidInput
from alliance_lab.graph import (Complete, Cycle, Graph, Hypercube, Path, ProductGraph,
                                ProductSpec, Star, VertexSet, build_family,
                                cartesian_product, cell, fiber, parse_edge_list,
                                parse_family, projections, serialize_edge_list)

from oracles import to_nx


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return Graph(n, chosen)


def test_path2_single_edge():
    g = build_family(Path(2))
    assert (g.n, g.edges) == (2, ((0, 1),))


def test_hypercube3_cubic():
    g = build_family(Hypercube(3))
    assert (g.n, g.m) == (8, 12)
    assert set(g.degrees()) == {3}
    assert nx.is_isomorphic(to_nx(g), nx.hypercube_graph(3))


def test_star_center_zero():
    g = build_family(Star(3))
    assert g.neighbors(0) == (1, 2, 3)
    assert all(g.neighbors(v) == (0,) for v in (1, 2, 3))


def test_cycle2_rejected():
    with pytest.raises(InvalidInput):
        Cycle(2)


def test_k2_square_is_c4():
    pg = cartesian_product(build_family(Complete(2)), build_family(Complete(2)))
    assert (pg.n, pg.m) == (4, 4)
    assert set(pg.degrees()) == {2}
    assert nx.is_isomorphic(to_nx(pg), nx.cycle_graph(4))


def test_product_edge_count():
    pg = cartesian_product(build_family(Path(2)), build_family(Path(3)))
    assert (pg.n, pg.m) == (6, 7)


def test_torus_regular():
    pg = cartesian_product(build_family(Cycle(3)), build_family(Cycle(3)))
    assert pg.n == 9 and set(pg.degrees()) == {4}


def test_product_order_budget():
    with pytest.raises(InvalidInput):
        cartesian_product(build_family(Path(9)), build_family(Path(8)))
    assert cartesian_product(build_family(Path(9)), build_family(Path(8)),
                             max_order=None).n == 72


@settings(max_examples=40, deadline=None)
@given(graphs(6), graphs(6))
def test_product_matches_networkx(g, h):
    pg = cartesian_product(g, h)
    theirs = nx.cartesian_product(to_nx(g), to_nx(h))
    mapping = {(i, j): pg.index(i, j) for i in range(g.n) for j in range(h.n)}
    assert set(map(frozenset, nx.relabel_nodes(theirs, mapping).edges())) == \
        set(map(frozenset, pg.edges))
    assert pg.m == g.m * h.n + h.m * g.n


def test_projection_examples():
    pg = cartesian_product(build_family(Path(2)), build_family(Path(3)))
    empty = projections(pg, [])
    assert (len(empty[0]), len(empty[1])) == (0, 0)
    x = [pg.index(0, 0), pg.index(0, 2), pg.index(1, 2)]
    pgx, phx = projections(pg, x)
    assert pgx.tolist() == [0, 1] and phx.tolist() == [0, 2]
    f = fiber(pg, 1)
    assert [pg.label(v) for v in f] == [(0, 1), (1, 1)] and len(f) == 2
    assert [pg.label(v) for v in cell(pg, [1], 2)] == [(1, 2)]
    with pytest.raises(InvalidInput):
        fiber(pg, 3)
    with pytest.raises(InvalidInput):
        pg.index(2, 0)


def test_fibers_partition_product():
    pg = build_family(parse_family("C4xP3"))
    masks = [fiber(pg, j).mask for j in range(pg.n2)]
    assert sum(m.bit_count() for m in masks) == pg.n
    total = 0
    for m in masks:
        assert total & m == 0
        total |= m
    assert total == pg.full_mask


def test_parse_edge_list_path():
    g = parse_edge_list("3\n0 1\n1 2\n")
    assert g == build_family(Path(3))


@pytest.mark.parametrize("text, needle", [
    ("2\n0 0\n", "self-loop"),
    ("3\n0 1\n0 1\n", "duplicate"),
    ("3\n0 3\n", ">= n"),
    ("3\n0 1 2\n", "malformed"),
    ("3\n1 0\n", "u < v"),
    ("", "missing"),
    ("x\n", "vertex count"),
])
def test_parse_errors_name_line(text, needle):
    with pytest.raises(InvalidInput, match=needle) as exc:
        parse_edge_list(text)
    assert "line" in str(exc.value)


@given(graphs())
def test_edge_list_round_trip(g):
    assert parse_edge_list(serialize_edge_list(g)) == g


@given(graphs())
def test_degree_sum_and_symmetry(g):
    assert sum(g.degrees()) == 2 * g.m
    for u, v in g.edges:
        assert u < v and g.has_edge(v, u)


def test_graph_rejects_bad_edges():
    for edges in ([(0, 0)], [(0, 5)], [(0, 1), (1, 0)]):
        with pytest.raises(InvalidInput):
            Graph(3, edges)


def test_parse_family_language():
    assert parse_family(" P4 x C6 ") == ProductSpec(Path(4), Cycle(6))
    assert parse_family("S5") == Star(5) and Star(5).order == 6
    assert parse_family("Q3").order == 8
    spec = parse_family("K2xK2xK2")
    assert spec.label == "K2xK2xK2" and spec.order == 8
    for bad in ("P", "Z3", "P4x", "C2", "P0"):
        with pytest.raises(InvalidInput):
            parse_family(bad)
    with pytest.raises(InvalidInput, match="Z3"):
        parse_family("P4xZ3")


def test_vertex_set_ops():
    s = VertexSet.of(5, [0, 3])
    assert list(s) == [0, 3] and len(s) == 2 and 3 in s and 1 not in s
    assert s.complement().tolist() == [1, 2, 4]
    with pytest.raises(InvalidInput):
        VertexSet.of(3, [3])


def test_components_and_bipartition():
    g = Graph(5, [(0, 1), (2, 3), (3, 4)])
    assert sorted(bin(c).count("1") for c in g.components()) == [2, 3]
    assert not g.is_connected() and g.is_bipartite()
    assert build_family(Cycle(5)).bipartition() is None
    a, b = build_family(Cycle(6)).bipartition()
    assert a | b == 0b111111 and a & b == 0


def test_pickle_round_trip():
    pg = build_family(parse_family("P3xC4"))
    back = pickle.loads(pickle.dumps(pg))
    assert isinstance(back, ProductGraph) and back == pg and back.n2 == 4
    assert back.family == pg.family
