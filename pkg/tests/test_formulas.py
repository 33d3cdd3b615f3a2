from __future__ import annotations

import pytest

from alliance_lab import exact, formulas
from alliance_lab.errors import InconsistencyError
from alliance_lab.formulas import BoundResult
from alliance_lab.graph import Graph, build_family, cartesian_product, parse_family


def fam(expr: str) -> Graph:
    return build_family(parse_family(expr))


@pytest.mark.parametrize("expr, lo, hi", [
    ("K3xP2", 3, 3),
    ("P4xP5", 10, 10),
    ("P5xP4", 10, 10),
    ("P3xP3", 4, 4),
    ("P3xC3", 4, 4),
    ("K2xK3", 3, 3),
    ("P4xP4", 8, 8),
    ("C3xC5", 8, 8),
    ("K3xC4", 6, 6),
    ("K4xK5", 9, 10),
    ("P9xP9", 38, 39),
    ("Q3", 3, 4),
])
def test_closed_formula_values(expr, lo, hi):
    b = formulas.closed_formula(parse_family(expr))
    assert (b.lo, b.hi) == (lo, hi)
    assert b.source


def test_grid_odd_odd_interval_opens_at_nine():
    for r in range(3, 9, 2):
        for t in range(3, 12, 2):
            assert formulas.grid_interval(r, t).exact
    assert not formulas.grid_interval(9, 9).exact


def test_uncovered_pair_is_not_an_error():
    b = formulas.closed_formula(parse_family("S3xC5"))
    assert not b.applicable and b.source == formulas.NO_FORMULA


def test_domination_product_examples():
    assert formulas.domination_product_lower(1, 2, 1, 1, True).lo == 2
    assert formulas.domination_product_lower(1, 2, 2, 1, False).lo == 1


def test_factor_lower_examples():
    assert formulas.path_factor_lower(2, 2, 3).lo == 3
    assert formulas.cycle_factor_lower(1, 4).lo == 2
    assert formulas.path_factor_lower(1, 1, 2).lo == 2
    assert not formulas.path_factor_lower(1, 0, 3).applicable


def test_radius_and_bipartite_examples():
    assert formulas.radius_upper(fam("P4"), fam("P4")).hi == 8
    assert formulas.bipartite_upper(fam("P4"), fam("C3")).hi == 8
    assert formulas.bipartite_pair_upper(fam("P2"), fam("P2")).hi == 2
    assert not formulas.bipartite_upper(fam("C3"), fam("P4")).applicable
    assert not formulas.radius_upper(Graph(3, [(0, 1)]), fam("P2")).applicable


def test_partition_examples():
    assert formulas.kr_partition_upper(3, fam("P4"), ([0, 2], [1, 3])).hi == 6
    c4 = ([0, 2], [1, 3])
    c6 = ([0, 2, 4], [1, 3, 5])
    assert formulas.partition_upper(fam("C4"), c4, fam("C6"), c6, formulas.GOA_STRONG).hi == 12
    star = fam("S2")
    b = formulas.partition_upper(star, ([0], [1, 2]), fam("P4"), ([0, 2], [1, 3]),
                                 formulas.TWO_GOA)
    assert b.hi == 6
    assert exact.global_offensive_alliance_number(
        build_family(parse_family("S2xP4"))).value <= 6


def test_partition_failure_is_inapplicable():
    b = formulas.partition_upper(fam("C5"), ([0, 2, 4], [1, 3]), fam("P4"),
                                 ([0, 2], [1, 3]), formulas.TWO_GOA)
    assert not b.applicable and "fails" in b.applicability[0]


def test_bipartition_product_pairs_classes():
    b = formulas.bipartition_product_upper(fam("S2"), fam("P4"))
    assert b.hi == 6
    assert not formulas.bipartition_product_upper(fam("C3"), fam("P4")).applicable


@pytest.mark.parametrize("g, h, lo, hi", [
    ("P4", "P4", 8, 8),
    ("C3", "C3", 5, 5),
    ("K4", "K5", 9, 10),
])
def test_envelope_examples(g, h, lo, hi):
    env = formulas.bound_envelope(fam(g), fam(h))
    assert (env.lo, env.hi) == (lo, hi)
    assert env.parts


def test_envelope_on_unnamed_graphs_brackets_exact():
    g = Graph(4, [(0, 1), (1, 2), (1, 3), (2, 3)])
    h = Graph(3, [(0, 1), (1, 2)])
    env = formulas.bound_envelope(g, h)
    value = exact.global_offensive_alliance_number(cartesian_product(g, h)).value
    assert env.contains(value)


def test_empty_interval_is_inconsistent():
    with pytest.raises(InconsistencyError):
        BoundResult(5, 4, "broken")


def test_bound_serialization():
    d = formulas.closed_formula(parse_family("P9xP9")).to_dict()
    assert d["lo"] == 38 and d["hi"] == 39 and d["applicability"]
    assert formulas.path_factor_lower(1, 1, 3).to_dict()["hi"] is None


def test_envelope_uses_complete_partition_bound():
    env = formulas.bound_envelope(fam("K3"), fam("P4"))
    sources = {p.source for p in env.parts}
    assert "complete-partition-upper" in sources
    assert (env.lo, env.hi) == (6, 6)
