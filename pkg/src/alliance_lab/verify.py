"""Certificate-producing checks for dominating sets and offensive alliances.

A certificate always names the first (lowest-index) vertex that breaks the
property, together with its inside/outside neighbor counts, so a failed check
can be re-done by hand against the graph.
"""

from __future__ import annotations

from dataclasses import dataclass, asdict
from typing import Iterator, NamedTuple, Sequence

from .errors import InconsistencyError, InvalidInput
from .graph import Graph, ProductGraph, VertexSet, as_mask, bits

BOTH_GOA = "both-goa"
GOA_PLUS_STRONG = "goa-plus-strong"
BOTH_STRONG = "both-strong"
PARTITION_MODES = (BOTH_GOA, GOA_PLUS_STRONG, BOTH_STRONG)


@dataclass(frozen=True)
class Certificate:
    verdict: bool
    vertex: int | None = None
    inside: int | None = None
    outside: int | None = None
    reason: str = "all vertices satisfied"
    square: tuple[int, int, int, int] | None = None

    def __bool__(self) -> bool:
        return self.verdict

    def to_dict(self) -> dict:
        d = asdict(self)
        if d["square"] is not None:
            d["square"] = list(d["square"])
        return d


_OK = Certificate(True)


class Square(NamedTuple):
    """Product vertices ``(u_i,v_k), (u_i,v_l), (u_j,v_k), (u_j,v_l)``."""

    ik: int
    il: int
    jk: int
    jl: int


def boundary_degrees(g: Graph, s, v: int) -> tuple[int, int]:
    """``(|N(v) & S|, |N(v) - S|)``."""
    if not 0 <= v < g.n:
        raise InvalidInput(f"vertex {v} out of range for n={g.n}")
    mask = as_mask(g, s)
    inside = (g.rows[v] & mask).bit_count()
    return inside, g.degree(v) - inside


def is_dominating_set(g: Graph, s) -> Certificate:
    mask = as_mask(g, s)
    rows = g.rows
    for v in range(g.n):
        if not mask >> v & 1 and not rows[v] & mask:
            return Certificate(False, v, 0, g.degree(v), "vertex has no neighbor in the set")
    return _OK


def _require_nonempty(mask: int) -> None:
    if not mask:
        raise InvalidInput("an alliance must be a nonempty vertex set")


def is_global_offensive_alliance(g: Graph, s) -> Certificate:
    """Every outside vertex needs strictly more neighbors inside than outside.

    The equivalent form ``d(v) >= 2*outside + 1`` is evaluated alongside and
    must agree at every vertex.
    """
    mask = as_mask(g, s)
    _require_nonempty(mask)
    rows = g.rows
    for v in range(g.n):
        if mask >> v & 1:
            continue
        d = g.degree(v)
        inside = (rows[v] & mask).bit_count()
        outside = d - inside
        ok = inside >= outside + 1
        if ok != (d >= 2 * outside + 1):
            raise InconsistencyError(f"alliance conditions disagree at vertex {v}")
        if not ok:
            return Certificate(False, v, inside, outside,
                               "outside vertex lacks a strict inside majority")
    return _OK


def is_global_strong_offensive_alliance(g: Graph, s) -> Certificate:
    mask = as_mask(g, s)
    _require_nonempty(mask)
    rows = g.rows
    for v in range(g.n):
        if mask >> v & 1:
            continue
        inside = (rows[v] & mask).bit_count()
        outside = g.degree(v) - inside
        if inside < outside:
            return Certificate(False, v, inside, outside,
                               "outside vertex has more outside than inside neighbors")
    return _OK


def is_efficient_dominating_set(g: Graph, s) -> Certificate:
    """Every vertex must lie in exactly one closed neighborhood of a member."""
    mask = as_mask(g, s)
    rows = g.rows
    for v in range(g.n):
        hits = ((rows[v] | 1 << v) & mask).bit_count()
        if hits != 1:
            inside = (rows[v] & mask).bit_count()
            reason = ("vertex is not dominated" if hits == 0 else
                      f"vertex lies in {hits} closed neighborhoods of members")
            return Certificate(False, v, inside, g.degree(v) - inside, reason)
    return _OK


_CHECKS = {
    "goa": is_global_offensive_alliance,
    "strong": is_global_strong_offensive_alliance,
}

_MODE_PARTS = {
    BOTH_GOA: ("goa", "goa"),
    GOA_PLUS_STRONG: ("goa", "strong"),
    BOTH_STRONG: ("strong", "strong"),
}


def check_partition(g: Graph, parts: Sequence, mode: str = BOTH_GOA) -> Certificate:
    """Check a two-part vertex partition against ``mode``.

    ``both-goa``: both parts are global offensive alliances.
    ``goa-plus-strong``: part 1 is one, part 2 is a global strong offensive
    alliance.  ``both-strong`` (both parts strong) is also accepted.
    """
    if mode not in _MODE_PARTS:
        raise InvalidInput(f"unknown partition mode {mode!r}")
    if len(parts) != 2:
        raise InvalidInput("a partition here has exactly two parts")
    masks = [as_mask(g, p) for p in parts]
    if any(m == 0 for m in masks):
        raise InvalidInput("partition parts must be nonempty")
    if masks[0] & masks[1] or masks[0] | masks[1] != g.full_mask:
        raise InvalidInput("parts are not a partition of the vertex set")
    for idx, (mask, kind) in enumerate(zip(masks, _MODE_PARTS[mode]), start=1):
        cert = _CHECKS[kind](g, VertexSet(g.n, mask))
        if not cert:
            return Certificate(False, cert.vertex, cert.inside, cert.outside,
                               f"part {idx} is not a {kind} alliance: {cert.reason}")
    return _OK


def enumerate_squares(pg: ProductGraph) -> Iterator[Square]:
    """Each square once: one left-factor edge times one right-factor edge."""
    n2 = pg.n2
    for i, j in pg.left.edges:
        for k, l in pg.right.edges:
            yield Square(i * n2 + k, i * n2 + l, j * n2 + k, j * n2 + l)


def is_path_or_cycle(g: Graph) -> bool:
    if not g.is_connected():
        return False
    degs = g.degrees()
    if max(degs, default=0) > 2:
        return False
    return g.m in (g.n - 1, g.n)


def check_square_lemma(pg: ProductGraph, s) -> Certificate:
    """Every square must hold at least two vertices of ``s``.

    Only defined when both factors are paths or cycles.
    """
    if not (is_path_or_cycle(pg.left) and is_path_or_cycle(pg.right)):
        raise InvalidInput("square lemma applies only when both factors are paths or cycles")
    mask = as_mask(pg, s)
    for sq in enumerate_squares(pg):
        hit = sum(mask >> v & 1 for v in sq)
        if hit < 2:
            return Certificate(False, reason=f"square holds only {hit} set vertices",
                               square=tuple(sq))
    return _OK


def is_independent(g: Graph, s) -> bool:
    mask = as_mask(g, s)
    return all(not g.rows[v] & mask for v in bits(mask))
