"""Closed formulas and bounds for the global offensive alliance number of
Cartesian products, each returned as an interval with provenance.

Every bound that has hypotheses on the factors checks them on the actual
graphs (connectivity, bipartiteness, claimed partitions) before it is emitted.
When a hypothesis fails the result is marked inapplicable instead.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InconsistencyError, InvalidInput
from .graph import (COMPLETE, CYCLE, HYPERCUBE, PATH, FamilySpec, Graph, ProductSpec,
                    VertexSet, as_mask, build_family)
from . import verify


def _cdiv(a: int, b: int) -> int:
    return -(-a // b)


@dataclass
class BoundResult:
    """``lo <= gamma_o <= hi``; ``hi is None`` means unbounded."""

    lo: int
    hi: int | None
    source: str
    applicability: list[str] = field(default_factory=list)
    applicable: bool = True
    parts: list["BoundResult"] = field(default_factory=list)

    def __post_init__(self):
        if not self.source:
            raise InconsistencyError("bound without a source")
        if self.hi is not None and self.lo > self.hi:
            raise InconsistencyError(f"{self.source}: empty interval [{self.lo}, {self.hi}]")

    @property
    def exact(self) -> bool:
        return self.applicable and self.hi == self.lo

    def contains(self, value: int) -> bool:
        return self.lo <= value and (self.hi is None or value <= self.hi)

    def to_dict(self) -> dict:
        d = {"lo": self.lo, "hi": self.hi, "source": self.source,
             "applicability": list(self.applicability)}
        if not self.applicable:
            d["applicable"] = False
        if self.parts:
            d["parts"] = [p.to_dict() for p in self.parts]
        return d


def inapplicable(source: str, reason: str) -> BoundResult:
    return BoundResult(1, None, source, [reason], applicable=False)


NO_FORMULA = "no closed formula"


# Closed formulas for family products


def _bamboo(r: int, t: int) -> BoundResult:
    if t < 2:
        return inapplicable("bamboo", "path factor needs order >= 2")
    v = r * t // 2
    return BoundResult(v, v, "bamboo", [f"K{r} x P{t}", "t >= 2"])


def _torus(r: int, t: int) -> BoundResult:
    v = _cdiv(r * t, 2)
    return BoundResult(v, v, "torus", [f"C{r} x C{t}"])


def _complete_cycle(r: int, t: int) -> BoundResult:
    v = _cdiv(r * t, 2)
    return BoundResult(v, v, "complete-x-cycle", [f"K{r} x C{t}"])


def grid_interval(r: int, t: int) -> BoundResult:
    """``P_r x P_t`` for ``r, t >= 2``; odd-odd is an interval."""
    if r < 2 or t < 2:
        return inapplicable("grid", "both path factors need order >= 2")
    hyp = [f"P{r} x P{t}"]
    if r % 2 == 0 and t % 2 == 0:
        v = r * t // 2
        return BoundResult(v, v, "grid-even-even", hyp)
    if r % 2 != t % 2:
        even, odd = (r, t) if r % 2 == 0 else (t, r)
        v = even * (odd - 1) // 2 + _cdiv(even, 3)
        return BoundResult(v, v, "grid-even-odd", hyp)
    lo = (r - 1) * (t - 1) // 2 + _cdiv(r, 3) + _cdiv(t, 3)
    hi_rt = r * (t - 1) // 2 + _cdiv(r, 3)
    hi_tr = t * (r - 1) // 2 + _cdiv(t, 3)
    source = "grid-odd-odd" + (" symmetrized" if hi_rt != hi_tr else "")
    return BoundResult(lo, min(hi_rt, hi_tr), source, hyp)


def cylinder_interval(r: int, t: int) -> BoundResult:
    """``P_r x C_t`` for ``r >= 2``."""
    if r < 2:
        return inapplicable("cylinder", "path factor needs order >= 2")
    hyp = [f"P{r} x C{t}"]
    if r % 2 == 0:
        v = r * t // 2
        return BoundResult(v, v, "cylinder-even", hyp)
    v = (r - 1) * t // 2 + _cdiv(t, 3)
    return BoundResult(v, v, "cylinder-odd", hyp)


def complete_complete_interval(r: int, t: int) -> BoundResult:
    hyp = [f"K{r} x K{t}"]
    hi = _cdiv(r * t, 2)
    if r % 2 == t % 2:
        return BoundResult(hi, hi, "complete-x-complete same parity", hyp)
    lo = _cdiv(r * t * (r + t - 1), 2 * (r + t))
    return BoundResult(lo, hi, "complete-x-complete mixed parity", hyp)


def hypercube_interval(k: int) -> BoundResult:
    lo = _cdiv((k + 2) // 2 * 2 ** (k - 1), k)
    return BoundResult(lo, 2 ** (k - 1), "hypercube", [f"Q{k}"])


def _is_k2(spec: FamilySpec) -> bool:
    return spec.kind in (COMPLETE, PATH) and spec.size == 2


def closed_formula(spec: ProductSpec | FamilySpec) -> BoundResult:
    """Interval for a covered family product; orientation does not matter."""
    if isinstance(spec, FamilySpec):
        if spec.kind == HYPERCUBE:
            return hypercube_interval(spec.size)
        return inapplicable(NO_FORMULA, f"{spec.label} is not a product")
    a, b = spec.left, spec.right
    if not (isinstance(a, FamilySpec) and isinstance(b, FamilySpec)):
        return inapplicable(NO_FORMULA, "nested products are not covered")
    kinds = {a.kind: a.size, b.kind: b.size}
    if a.kind == b.kind:
        r, t = sorted((a.size, b.size))
        if a.kind == PATH:
            return grid_interval(r, t)
        if a.kind == CYCLE:
            return _torus(r, t)
        if a.kind == COMPLETE:
            return complete_complete_interval(r, t)
        if a.kind == HYPERCUBE:
            return hypercube_interval(r + t)
    elif set(kinds) == {COMPLETE, PATH}:
        return _bamboo(kinds[COMPLETE], kinds[PATH])
    elif set(kinds) == {COMPLETE, CYCLE}:
        return _complete_cycle(kinds[COMPLETE], kinds[CYCLE])
    elif set(kinds) == {PATH, CYCLE}:
        return cylinder_interval(kinds[PATH], kinds[CYCLE])
    if HYPERCUBE in kinds:
        other = b if a.kind == HYPERCUBE else a
        if _is_k2(other):
            return hypercube_interval(kinds[HYPERCUBE] + 1)
    return inapplicable(NO_FORMULA, f"{spec.label} is not a covered family pair")


# Lower bounds from factor parameters


def domination_product_lower(gamma_g: int, gammao_h: int, gammao_g: int, gamma_h: int,
                    eds_exists_g: bool, eds_exists_h: bool = False) -> BoundResult:
    """Half of the larger cross product of domination and alliance numbers; the
    full product when the left factor has an efficient dominating set (and
    symmetrically for the right factor)."""
    lo = _cdiv(max(gamma_g * gammao_h, gammao_g * gamma_h), 2)
    hyp = ["general graphs"]
    source = "domination-product-half"
    if eds_exists_g and gamma_g * gammao_h > lo:
        lo, source = gamma_g * gammao_h, "efficient-domination-product"
        hyp.append("G has an efficient dominating set")
    if eds_exists_h and gamma_h * gammao_g > lo:
        lo, source = gamma_h * gammao_g, "efficient-domination-product"
        hyp.append("H has an efficient dominating set")
    return BoundResult(lo, None, source, hyp)


def path_factor_lower(gammao_g: int, delta_g: int, n: int) -> BoundResult:
    """``G x P_n``, needs minimum degree >= 1 in G."""
    if delta_g < 1:
        return inapplicable("path-factor-lower", "G has an isolated vertex (delta = 0)")
    lo = _cdiv((n - 1) * gammao_g, 2) + _cdiv(delta_g, 2)
    return BoundResult(lo, None, "path-factor-lower", [f"H = P{n}", "delta(G) >= 1"])


def cycle_factor_lower(gammao_g: int, n: int) -> BoundResult:
    return BoundResult(_cdiv(n * gammao_g, 2), None, "cycle-factor-lower", [f"H = C{n}"])


# Upper bounds with verified hypotheses


def radius_upper(g: Graph, h: Graph) -> BoundResult:
    from .exact import radius

    if not (g.is_connected() and h.is_connected()):
        return inapplicable("radius-upper", "both factors must be connected")
    if g.n * h.n < 2:
        return inapplicable("radius-upper", "product needs order >= 2")
    hi = g.n * h.n - 2 * radius(g) * radius(h)
    return BoundResult(1, hi, "radius-upper", ["G connected", "H connected"])


def bipartite_upper(g: Graph, h: Graph, alpha2_h: int | None = None) -> BoundResult:
    """``n1 * (n2 - alpha2(H) / 2)``, floored; G connected bipartite, H connected."""
    if not (g.is_connected() and g.is_bipartite()):
        return inapplicable("bipartite-number-upper", "G must be connected and bipartite")
    if not h.is_connected():
        return inapplicable("bipartite-number-upper", "H must be connected")
    if g.n * h.n < 2:
        return inapplicable("bipartite-number-upper", "product needs order >= 2")
    if alpha2_h is None:
        from .exact import bipartite_number

        alpha2_h = bipartite_number(h).value
    numerator = g.n * (2 * h.n - alpha2_h)
    source = "bipartite-number-upper" + (" floored" if numerator % 2 else "")
    return BoundResult(1, numerator // 2, source,
                       ["G connected bipartite", "H connected", f"alpha2(H) = {alpha2_h}"])


def bipartite_pair_upper(g: Graph, h: Graph) -> BoundResult:
    if not all(x.is_connected() and x.is_bipartite() for x in (g, h)):
        return inapplicable("bipartite-pair-upper", "both factors must be connected bipartite")
    if g.n * h.n < 2:
        return inapplicable("bipartite-pair-upper", "product needs order >= 2")
    return BoundResult(1, g.n * h.n // 2, "bipartite-pair-upper",
                       ["G connected bipartite", "H connected bipartite"])


TWO_GOA = "two-goa"        # G: two alliances, H: two strong alliances
GOA_STRONG = "goa-strong"  # both: alliance + strong alliance

_PARTITION_MODES = {
    TWO_GOA: (verify.BOTH_GOA, verify.BOTH_STRONG),
    GOA_STRONG: (verify.GOA_PLUS_STRONG, verify.GOA_PLUS_STRONG),
}


def partition_upper(g: Graph, gx, h: Graph, hy, mode: str = GOA_STRONG) -> BoundResult:
    """``|X1||Y1| + |X2||Y2|`` for verified partitions ``gx = (X1, X2)`` of G and
    ``hy = (Y1, Y2)`` of H."""
    if mode not in _PARTITION_MODES:
        raise InvalidInput(f"unknown partition mode {mode!r}")
    g_mode, h_mode = _PARTITION_MODES[mode]
    source = f"partition-upper {mode}"
    for name, graph, parts, pmode in (("G", g, gx, g_mode), ("H", h, hy, h_mode)):
        try:
            cert = verify.check_partition(graph, parts, pmode)
        except InvalidInput as exc:
            return inapplicable(source, f"{name}: {exc}")
        if not cert:
            return inapplicable(source, f"{name} partition fails {pmode}: {cert.reason}")
    x1, x2 = (len(VertexSet(g.n, as_mask(g, p))) for p in gx)
    y1, y2 = (len(VertexSet(h.n, as_mask(h, p))) for p in hy)
    return BoundResult(1, x1 * y1 + x2 * y2, source,
                       [f"G partition {g_mode} ({x1},{x2})",
                        f"H partition {h_mode} ({y1},{y2})"])


def kr_partition_upper(r: int, h: Graph, hy) -> BoundResult:
    """``floor(r n / 2)`` for ``K_r x H`` when H splits into two alliances."""
    source = "complete-partition-upper"
    try:
        cert = verify.check_partition(h, hy, verify.BOTH_GOA)
    except InvalidInput as exc:
        return inapplicable(source, str(exc))
    if not cert:
        return inapplicable(source, f"H partition fails both-goa: {cert.reason}")
    return BoundResult(1, r * h.n // 2, source, [f"G = K{r}", "H partition both-goa"])


def bipartition_product_upper(g: Graph, h: Graph) -> BoundResult:
    """``p1 t1 + p2 t2`` from the color classes, best pairing of the classes.

    Color classes of a bipartite graph without isolated vertices are both
    alliances, which is what the partition bound needs; this is re-checked.
    """
    source = "bipartition-product-upper"
    parts = []
    for name, x in (("G", g), ("H", h)):
        bp = x.bipartition()
        if bp is None:
            return inapplicable(source, f"{name} is not bipartite")
        if x.min_degree < 1:
            return inapplicable(source, f"{name} has an isolated vertex")
        parts.append(tuple(VertexSet(x.n, m) for m in bp))
    (p1, p2), (t1, t2) = parts
    first = partition_upper(g, (p1, p2), h, (t1, t2), TWO_GOA)
    second = partition_upper(g, (p1, p2), h, (t2, t1), TWO_GOA)
    if not (first.applicable and second.applicable):
        raise InconsistencyError("bipartition classes failed the partition check")
    best = min(first.hi, second.hi)
    return BoundResult(1, best, source,
                       [f"G ({len(p1)},{len(p2)})-bipartite",
                        f"H ({len(t1)},{len(t2)})-bipartite"])


# Structural recognition for the envelope


def recognize_family(g: Graph) -> FamilySpec | None:
    """The family spec whose canonical construction equals ``g`` exactly (same
    labels), if any."""
    if isinstance(g.family, FamilySpec):
        return g.family
    n, m = g.n, g.m
    candidates = []
    if m == n - 1:
        candidates += [FamilySpec(PATH, n)]
        if n >= 2:
            candidates.append(FamilySpec("star", n - 1))
    if m == n and n >= 3:
        candidates.append(FamilySpec(CYCLE, n))
    if m == n * (n - 1) // 2 and n >= 1:
        candidates.append(FamilySpec(COMPLETE, n))
    for spec in candidates:
        if build_family(spec) == g:
            return spec
    return None


def _is_path(g: Graph) -> bool:
    return g.is_connected() and g.m == g.n - 1 and g.max_degree <= 2


def _is_cycle(g: Graph) -> bool:
    return g.n >= 3 and g.is_connected() and all(d == 2 for d in g.degrees())


def _is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


@dataclass
class FactorData:
    gamma: int
    gammao: int
    eds: bool
    alpha2: int


def factor_data(g: Graph) -> FactorData:
    from . import exact

    return FactorData(
        gamma=exact.domination_number(g).value,
        gammao=exact.global_offensive_alliance_number(g).value,
        eds=exact.find_efficient_dominating_set(g) is not None,
        alpha2=exact.bipartite_number(g).value,
    )


def applicable_bounds(g: Graph, h: Graph) -> list[BoundResult]:
    """Every bound from the catalogue whose hypotheses hold for ``g x h``."""
    from .constructions import canonical_two_partition
    from .graph import cartesian_product
    from .spectral import spectral_lower_bound

    bounds = [BoundResult(1, g.n * h.n, "trivial", ["whole vertex set"])]
    fg, fh = recognize_family(g), recognize_family(h)
    if fg is not None and fh is not None:
        bounds.append(closed_formula(ProductSpec(fg, fh)))
    dg, dh = factor_data(g), factor_data(h)
    bounds.append(domination_product_lower(dg.gamma, dh.gammao, dg.gammao, dh.gamma, dg.eds, dh.eds))
    for a, b, da in ((g, h, dg), (h, g, dh)):
        if _is_path(b):
            bounds.append(path_factor_lower(da.gammao, a.min_degree, b.n))
        if _is_cycle(b):
            bounds.append(cycle_factor_lower(da.gammao, b.n))
    bounds.append(radius_upper(g, h))
    bounds.append(bipartite_upper(g, h, dh.alpha2))
    bounds.append(bipartite_upper(h, g, dg.alpha2))
    bounds.append(bipartite_pair_upper(g, h))
    bounds.append(bipartition_product_upper(g, h))
    for a, b in ((g, h), (h, g)):
        bp = b.bipartition()
        if _is_complete(a) and bp is not None and b.min_degree >= 1:
            bounds.append(kr_partition_upper(a.n, b, [VertexSet(b.n, m) for m in bp]))
    if fg is not None and fh is not None:
        try:
            gx = canonical_two_partition(fg)
            hy = canonical_two_partition(fh)
        except InvalidInput:
            pass
        else:
            bounds.append(partition_upper(g, gx[:2], h, hy[:2], GOA_STRONG))
    pg = cartesian_product(g, h, max_order=None)
    if pg.n >= 2 and pg.is_connected():
        bounds.append(BoundResult(spectral_lower_bound(pg), None, "spectral-lower",
                                  ["product connected"]))
    return [b for b in bounds if b.applicable]


def bound_envelope(g: Graph, h: Graph) -> BoundResult:
    """Intersection of every applicable bound for ``g x h``."""
    bounds = applicable_bounds(g, h)
    lo = max(b.lo for b in bounds)
    his = [b.hi for b in bounds if b.hi is not None]
    hi = min(his) if his else None
    if hi is not None and lo > hi:
        dump = "; ".join(f"{b.source}: [{b.lo}, {b.hi}]" for b in bounds)
        raise InconsistencyError(f"bounds for {g.name} x {h.name} cross: {dump}")
    contributing = [b.source for b in bounds if b.lo == lo or (hi is not None and b.hi == hi)]
    return BoundResult(lo, hi, "envelope", contributing, parts=bounds)
