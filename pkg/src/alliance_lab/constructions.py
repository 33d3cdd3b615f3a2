"""Explicit global offensive alliances realising the product upper bounds.

Every construction is checked with :func:`verify.is_global_offensive_alliance`
and against its claimed cardinality before it is returned; a mismatch raises
:class:`InconsistencyError`, since it can only mean a transcription bug.

Index patterns are 0-based.  Residue classes quoted in the recipes refer to
0-based row indices, e.g. the 1-based rows ``2, 5, 8, ...`` become
``{i : i % 3 == 1}``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InconsistencyError, InvalidInput
from .graph import (COMPLETE, CYCLE, PATH, FamilySpec, Graph, ProductGraph, VertexSet,
                    as_mask, bits, build_family, cartesian_product, Cycle, Path)
from . import verify


@dataclass(frozen=True)
class Construction:
    graph: Graph
    vertices: VertexSet
    claimed_cardinality: int
    recipe: str

    def to_dict(self) -> dict:
        if isinstance(self.graph, ProductGraph):
            verts = [list(self.graph.label(v)) for v in self.vertices]
        else:
            verts = self.vertices.tolist()
        return {"recipe": self.recipe, "cardinality": self.claimed_cardinality,
                "vertices": verts}


def _finish(g: Graph, mask: int, claimed: int, recipe: str) -> Construction:
    vs = VertexSet(g.n, mask)
    if len(vs) != claimed:
        raise InconsistencyError(f"{recipe}: built {len(vs)} vertices, claimed {claimed}")
    cert = verify.is_global_offensive_alliance(g, vs)
    if not cert:
        raise InconsistencyError(f"{recipe}: not an alliance at vertex {cert.vertex} "
                                 f"({cert.inside} in, {cert.outside} out)")
    return Construction(g, vs, claimed, recipe)


def _cdiv(a: int, b: int) -> int:
    return -(-a // b)


def _grid(r: int, t: int) -> ProductGraph:
    return cartesian_product(build_family(Path(r)), build_family(Path(t)), max_order=None)


def _row_pattern(rows: int, cols: int) -> set[tuple[int, int]]:
    """Row/column pattern for a path of ``rows`` vertices times a path of an odd
    number ``cols`` of vertices.

    Marked rows A: ``{i % 3 == 1}`` when ``rows % 3 == 0``, else ``{i % 3 == 0}``;
    this is ``ceil(rows / 3)`` rows.  Even columns take the marked rows, odd
    columns take the unmarked ones.
    """
    marked_residue = 1 if rows % 3 == 0 else 0
    cells = set()
    for i in range(rows):
        marked = i % 3 == marked_residue
        for j in range(cols):
            if (j % 2 == 0) == marked:
                cells.add((i, j))
    return cells


def grid_goa(r: int, t: int) -> Construction:
    """Alliance in ``P_r x P_t``; vertex ``(i, j)`` has row i in P_r.

    * both even: one color class of the grid, ``rt/2`` vertices;
    * exactly one odd: the row pattern with the even side as rows,
      ``e(o-1)/2 + ceil(e/3)``;
    * both odd: the row pattern in whichever orientation is smaller,
      ``min(r(t-1)/2 + ceil(r/3), t(r-1)/2 + ceil(t/3))``.
    """
    if r < 2 or t < 2:
        raise InvalidInput("grid construction needs r, t >= 2")
    pg = _grid(r, t)
    if r % 2 == 0 and t % 2 == 0:
        odd_class = VertexSet.of(pg.n, (v for v in range(pg.n) if sum(pg.label(v)) % 2))
        c = complement_of_independent_set(pg, odd_class)
        return Construction(pg, c.vertices, c.claimed_cardinality, "grid-color-class")
    options = []
    if t % 2 == 1:
        options.append((r * (t - 1) // 2 + _cdiv(r, 3), "grid-row-pattern",
                        _row_pattern(r, t)))
    if r % 2 == 1:
        cells = {(i, j) for j, i in _row_pattern(t, r)}
        options.append((t * (r - 1) // 2 + _cdiv(t, 3), "grid-row-pattern transposed",
                        cells))
    claimed, recipe, cells = min(options, key=lambda o: o[0])
    mask = 0
    for i, j in cells:
        mask |= 1 << pg.index(i, j)
    return _finish(pg, mask, claimed, recipe)


def cylinder_goa(r: int, t: int) -> Construction:
    """Alliance in ``P_r x C_t``.

    Even r: product of the path's two color classes with the cycle's
    alliance/strong-alliance split, ``rt/2`` vertices.  Odd r: even rows take
    the columns ``j % 3 == 0``, odd rows the others,
    ``(r-1)t/2 + ceil(t/3)`` vertices.
    """
    if r < 2 or t < 3:
        raise InvalidInput("cylinder construction needs r >= 2 and t >= 3")
    p, c = build_family(Path(r)), build_family(Cycle(t))
    if r % 2 == 0:
        px = canonical_two_partition(Path(r))
        cy = canonical_two_partition(Cycle(t))
        built = product_partition_goa(p, c, px[:2], cy[:2], "goa-strong")
        return Construction(built.graph, built.vertices, built.claimed_cardinality,
                            "cylinder-partition-product")
    pg = cartesian_product(p, c, max_order=None)
    mask = 0
    for i in range(r):
        for j in range(t):
            if (i % 2 == 0) == (j % 3 == 0):
                mask |= 1 << pg.index(i, j)
    return _finish(pg, mask, (r - 1) * t // 2 + _cdiv(t, 3), "cylinder-residue-pattern")


def canonical_two_partition(spec: FamilySpec) -> tuple[VertexSet, VertexSet, str]:
    """Two-part split of a path, cycle or complete graph and the mode it satisfies.

    Path: even/odd indices, both alliances.  Cycle: even indices (which for
    odd n includes the adjacent pair n-1, 0) as the alliance, odd indices as
    the strong alliance.  Complete: the first ``ceil(n/2)`` vertices as the
    alliance, the rest strong.
    """
    if spec.kind not in (PATH, CYCLE, COMPLETE):
        raise InvalidInput(f"no canonical two-partition for {spec.label}")
    n = spec.order
    if n < 2:
        raise InvalidInput(f"{spec.label} is too small to split in two")
    g = build_family(spec)
    if spec.kind == COMPLETE:
        first = set(range(_cdiv(n, 2)))
        mode = verify.GOA_PLUS_STRONG
    else:
        first = set(range(0, n, 2))
        mode = verify.BOTH_GOA if spec.kind == PATH else verify.GOA_PLUS_STRONG
    x1 = VertexSet.of(n, first)
    x2 = x1.complement()
    cert = verify.check_partition(g, (x1, x2), mode)
    if not cert:
        raise InconsistencyError(f"canonical partition of {spec.label} fails {mode}: "
                                 f"{cert.reason}")
    return x1, x2, mode


_PRODUCT_MODES = {
    "two-goa": (verify.BOTH_GOA, verify.BOTH_STRONG),
    "goa-strong": (verify.GOA_PLUS_STRONG, verify.GOA_PLUS_STRONG),
    "complete-half": (None, verify.BOTH_GOA),
}


def product_partition_goa(g: Graph, h: Graph, gx, hy, mode: str = "goa-strong"
                          ) -> Construction:
    """``(X1 x Y1) | (X2 x Y2)`` on ``g x h``.

    ``two-goa``: gx splits g into two alliances, hy splits h into two strong
    alliances.  ``goa-strong``: each split is alliance + strong alliance.
    ``complete-half``: g is complete; gx may be None for the default split of
    the first ``ceil(r/2)`` vertices, and hy (two alliances) is reordered so
    the smaller part pairs with the larger half.
    """
    if mode not in _PRODUCT_MODES:
        raise InvalidInput(f"unknown product mode {mode!r}")
    g_mode, h_mode = _PRODUCT_MODES[mode]
    if mode == "complete-half":
        if g.m != g.n * (g.n - 1) // 2:
            raise InvalidInput("complete-half needs a complete left factor")
        if gx is None:
            head = VertexSet.of(g.n, range(_cdiv(g.n, 2)))
            gx = (head, head.complement())
    hm = [as_mask(h, p) for p in hy]
    gm = [as_mask(g, p) for p in gx]
    if g_mode is not None:
        cert = verify.check_partition(g, [VertexSet(g.n, m) for m in gm], g_mode)
        if not cert:
            raise InvalidInput(f"left partition fails {g_mode}: {cert.reason}")
    elif gm[0] & gm[1] or gm[0] | gm[1] != g.full_mask or sorted(
            m.bit_count() for m in gm) != [g.n // 2, _cdiv(g.n, 2)]:
        raise InvalidInput("left split must be a near-equal partition")
    cert = verify.check_partition(h, [VertexSet(h.n, m) for m in hm], h_mode)
    if not cert:
        raise InvalidInput(f"right partition fails {h_mode}: {cert.reason}")
    if mode == "complete-half":
        if gm[0].bit_count() < gm[1].bit_count():
            gm.reverse()
        if hm[0].bit_count() > hm[1].bit_count():
            hm.reverse()
    pg = cartesian_product(g, h, max_order=None)
    mask = 0
    for xa, yb in ((gm[0], hm[0]), (gm[1], hm[1])):
        for i in bits(xa):
            for j in bits(yb):
                mask |= 1 << pg.index(i, j)
    claimed = sum(a.bit_count() * b.bit_count() for a, b in zip(gm, hm))
    return _finish(pg, mask, claimed, f"partition-product {mode}")


def complement_of_independent_set(g: Graph, i) -> Construction:
    """``V - I`` for an independent set I in a graph without isolated vertices."""
    mask = as_mask(g, i)
    if g.min_degree < 1:
        raise InvalidInput("graph has an isolated vertex")
    if mask == g.full_mask:
        raise InvalidInput("independent set must not cover every vertex")
    if not verify.is_independent(g, VertexSet(g.n, mask)):
        raise InvalidInput("given set is not independent")
    rest = g.full_mask & ~mask
    return _finish(g, rest, rest.bit_count(), "complement-of-independent-set")
