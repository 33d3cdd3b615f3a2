"""Simple undirected graphs, the named families, and the Cartesian product.

Vertices are always ``0..n-1``.  Adjacency is kept twice: as sorted neighbor
tuples and as one Python ``int`` bit-row per vertex.  The bit rows are what the
solvers use; an ``int`` is arbitrary precision, so sets over more than 64
vertices fall back to multi-word arithmetic without any special casing.

Index conventions for the families (0-based):

* ``P_n``: ``i ~ i+1``.  A pattern given 1-based as ``u_1..u_n`` maps to
  ``i - 1``.
* ``C_n``: ``i ~ i+1 (mod n)``; already 0-based.
* ``K_n``: all pairs.
* ``S_{1,n}``: vertex 0 is the center, leaves are ``1..n``.
* ``Q_k``: built as ``Q_{k-1} x K_2``, so vertex ``v`` is a k-bit word and
  neighbors differ in exactly one bit.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import InvalidInput

DEFAULT_MAX_ORDER = 64

PATH = "path"
CYCLE = "cycle"
COMPLETE = "complete"
STAR = "star"
HYPERCUBE = "hypercube"
EXPLICIT = "explicit"

_KIND_LETTER = {PATH: "P", CYCLE: "C", COMPLETE: "K", STAR: "S", HYPERCUBE: "Q"}
_LETTER_KIND = {v: k for k, v in _KIND_LETTER.items()}


@dataclass(frozen=True)
class FamilySpec:
    """Symbolic name of a graph family member, e.g. ``FamilySpec("cycle", 5)``.

    For ``star`` the size is the number of leaves (order ``size + 1``); for
    ``hypercube`` it is the dimension k (order ``2**k``).
    """

    kind: str
    size: int = 0

    def __post_init__(self):
        if self.kind == EXPLICIT:
            return
        if self.kind not in _KIND_LETTER:
            raise InvalidInput(f"unknown family kind {self.kind!r}")
        if not isinstance(self.size, int) or isinstance(self.size, bool):
            raise InvalidInput(f"family size must be an integer, got {self.size!r}")
        minimum = 3 if self.kind == CYCLE else 1
        if self.size < minimum:
            raise InvalidInput(f"{self.label}: size must be >= {minimum}")

    @property
    def label(self) -> str:
        if self.kind == EXPLICIT:
            return "explicit"
        return f"{_KIND_LETTER[self.kind]}{self.size}"

    @property
    def order(self) -> int:
        if self.kind == STAR:
            return self.size + 1
        if self.kind == HYPERCUBE:
            return 2 ** self.size
        return self.size

    def __str__(self) -> str:
        return self.label


def Path(n: int) -> FamilySpec:
    return FamilySpec(PATH, n)


def Cycle(n: int) -> FamilySpec:
    return FamilySpec(CYCLE, n)


def Complete(n: int) -> FamilySpec:
    return FamilySpec(COMPLETE, n)


def Star(n: int) -> FamilySpec:
    return FamilySpec(STAR, n)


def Hypercube(k: int) -> FamilySpec:
    return FamilySpec(HYPERCUBE, k)


@dataclass(frozen=True)
class ProductSpec:
    """``left x right``.  Either side may itself be a ProductSpec."""

    left: "FamilySpec | ProductSpec"
    right: "FamilySpec | ProductSpec"

    @property
    def label(self) -> str:
        return f"{self.left.label}x{self.right.label}"

    @property
    def order(self) -> int:
        return self.left.order * self.right.order

    def __str__(self) -> str:
        return self.label


_TOKEN = re.compile(r"([A-Za-z]+)(\d+)")


def parse_family(expr: str) -> FamilySpec | ProductSpec:
    """Parse the family mini-language: ``P4``, ``C6``, ``K3``, ``S5``, ``Q3`` and
    products ``AxB`` (left-associative, whitespace-insensitive)."""
    text = "".join(expr.split())
    if not text:
        raise InvalidInput("empty family expression")
    specs = []
    for token in re.split(r"[xX□]", text):
        m = _TOKEN.fullmatch(token)
        if m is None or m.group(1).upper() not in _LETTER_KIND:
            raise InvalidInput(f"bad family token {token!r} in {expr!r}")
        specs.append(FamilySpec(_LETTER_KIND[m.group(1).upper()], int(m.group(2))))
    spec: FamilySpec | ProductSpec = specs[0]
    for nxt in specs[1:]:
        spec = ProductSpec(spec, nxt)
    return spec


class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``."""

    __slots__ = ("n", "rows", "_nbrs", "family", "_edges")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = (),
                 family: FamilySpec | ProductSpec | None = None):
        if n < 0:
            raise InvalidInput("vertex count must be non-negative")
        rows = [0] * n
        m = 0
        for u, v in edges:
            if u == v:
                raise InvalidInput(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidInput(f"edge ({u}, {v}) out of range for n={n}")
            if rows[u] >> v & 1:
                raise InvalidInput(f"duplicate edge ({min(u, v)}, {max(u, v)})")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
            m += 1
        self.n = n
        self.rows: tuple[int, ...] = tuple(rows)
        self._nbrs = tuple(tuple(_bits(r)) for r in rows)
        self.family = family
        self._edges = None

    # Basic structure

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        if self._edges is None:
            self._edges = tuple((u, v) for u in range(self.n)
                                for v in self._nbrs[u] if u < v)
        return self._edges

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._nbrs[v]

    def degree(self, v: int) -> int:
        return len(self._nbrs[v])

    def degrees(self) -> list[int]:
        return [len(nb) for nb in self._nbrs]

    @property
    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    @property
    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    @property
    def name(self) -> str:
        if self.family is not None:
            return self.family.label
        return f"graph(n={self.n},m={self.m})"

    # Connectivity and bipartiteness

    def components(self) -> list[int]:
        """Vertex masks of the connected components, ordered by smallest vertex."""
        seen = 0
        comps = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            comp = frontier = 1 << s
            while frontier:
                nxt = 0
                for v in _bits(frontier):
                    nxt |= self.rows[v]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append(comp)
        return comps

    def is_connected(self) -> bool:
        return self.n > 0 and len(self.components()) == 1

    def bipartition(self) -> tuple[int, int] | None:
        """Two color-class masks, or None when an odd cycle exists.

        Each component's smallest vertex lands in the first class.
        """
        color = [-1] * self.n
        a = b = 0
        for s in range(self.n):
            if color[s] >= 0:
                continue
            color[s] = 0
            stack = [s]
            while stack:
                v = stack.pop()
                for w in self._nbrs[v]:
                    if color[w] < 0:
                        color[w] = 1 - color[v]
                        stack.append(w)
                    elif color[w] == color[v]:
                        return None
        for v, c in enumerate(color):
            if c == 0:
                a |= 1 << v
            else:
                b |= 1 << v
        return a, b

    def is_bipartite(self) -> bool:
        return self.bipartition() is not None

    def distances_from(self, s: int) -> list[int]:
        """BFS distances from ``s``; -1 marks unreachable vertices."""
        dist = [-1] * self.n
        dist[s] = 0
        frontier = [s]
        while frontier:
            nxt = []
            for v in frontier:
                for w in self._nbrs[v]:
                    if dist[w] < 0:
                        dist[w] = dist[v] + 1
                        nxt.append(w)
            frontier = nxt
        return dist

    def induced(self, mask: int) -> "Graph":
        """Induced subgraph, relabelled to ``0..k-1`` in increasing vertex order."""
        verts = list(_bits(mask))
        pos = {v: i for i, v in enumerate(verts)}
        edges = [(pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos]
        return Graph(len(verts), edges)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph(self.n, [(perm[u], perm[v]) for u, v in self.edges])

    # Dunder

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __repr__(self) -> str:
        return f"Graph(name={self.name!r}, n={self.n}, m={self.m})"

    def __getstate__(self):
        return (self.n, self.edges, self.family)

    def __setstate__(self, state):
        n, edges, family = state
        Graph.__init__(self, n, edges, family)


class ProductGraph(Graph):
    """``G x H`` with vertex ``(i, j)`` stored at index ``i * n2 + j``."""

    __slots__ = ("left", "right", "n1", "n2")

    def __init__(self, left: Graph, right: Graph, family=None):
        n1, n2 = left.n, right.n
        edges = []
        for i in range(n1):
            for j, l in right.edges:
                edges.append((i * n2 + j, i * n2 + l))
        for i, k in left.edges:
            for j in range(n2):
                edges.append((i * n2 + j, k * n2 + j))
        if family is None and left.family is not None and right.family is not None:
            family = ProductSpec(left.family, right.family)
        super().__init__(n1 * n2, edges, family)
        self.left = left
        self.right = right
        self.n1 = n1
        self.n2 = n2

    def label(self, v: int) -> tuple[int, int]:
        if not 0 <= v < self.n:
            raise InvalidInput(f"vertex {v} out of range for n={self.n}")
        return divmod(v, self.n2)

    def index(self, i: int, j: int) -> int:
        if not (0 <= i < self.n1 and 0 <= j < self.n2):
            raise InvalidInput(f"coordinate ({i}, {j}) out of range "
                               f"for {self.n1}x{self.n2}")
        return i * self.n2 + j

    def __getstate__(self):
        return (self.left, self.right, self.family)

    def __setstate__(self, state):
        left, right, family = state
        ProductGraph.__init__(self, left, right, family)


@dataclass(frozen=True)
class VertexSet:
    """A subset of ``0..n-1`` stored as a bit mask."""

    n: int
    mask: int = 0

    def __post_init__(self):
        if self.mask < 0 or self.mask >> self.n:
            raise InvalidInput(f"vertex set has members outside 0..{self.n - 1}")

    @classmethod
    def of(cls, n: int, vertices: Iterable[int]) -> "VertexSet":
        mask = 0
        for v in vertices:
            if not 0 <= v < n:
                raise InvalidInput(f"vertex {v} out of range for n={n}")
            mask |= 1 << v
        return cls(n, mask)

    def __iter__(self) -> Iterator[int]:
        return _bits(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, v) -> bool:
        return isinstance(v, int) and 0 <= v < self.n and bool(self.mask >> v & 1)

    def complement(self) -> "VertexSet":
        return VertexSet(self.n, ((1 << self.n) - 1) & ~self.mask)

    def tolist(self) -> list[int]:
        return list(_bits(self.mask))

    def __repr__(self) -> str:
        return f"VertexSet({self.tolist()})"


def as_mask(g: Graph, s) -> int:
    """Bit mask of ``s`` (a VertexSet or an iterable of vertices) checked against ``g``."""
    if isinstance(s, VertexSet):
        if s.n != g.n:
            raise InvalidInput(f"vertex set is over {s.n} vertices, graph has {g.n}")
        return s.mask
    return VertexSet.of(g.n, s).mask


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


bits = _bits


# Constructors


def build_family(spec: FamilySpec | ProductSpec, *, max_order: int | None = None) -> Graph:
    """Canonical graph for a family name or a product of family names."""
    if isinstance(spec, ProductSpec):
        left = build_family(spec.left)
        right = build_family(spec.right)
        return cartesian_product(left, right, max_order=max_order or DEFAULT_MAX_ORDER)
    kind, n = spec.kind, spec.size
    if kind == PATH:
        return Graph(n, [(i, i + 1) for i in range(n - 1)], spec)
    if kind == CYCLE:
        return Graph(n, [(i, (i + 1) % n) for i in range(n)], spec)
    if kind == COMPLETE:
        return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)], spec)
    if kind == STAR:
        return Graph(n + 1, [(0, i) for i in range(1, n + 1)], spec)
    if kind == HYPERCUBE:
        k2 = Graph(2, [(0, 1)], Complete(2))
        g = Graph(2, [(0, 1)], Hypercube(1))
        for k in range(2, n + 1):
            g = ProductGraph(g, k2, Hypercube(k))
        return g
    raise InvalidInput(f"cannot build family {spec!r}")


def cartesian_product(g: Graph, h: Graph, *,
                      max_order: int | None = DEFAULT_MAX_ORDER) -> ProductGraph:
    """``g x h``; rejected when the order exceeds ``max_order`` (None disables)."""
    if g.n == 0 or h.n == 0:
        raise InvalidInput("Cartesian product needs two nonempty graphs")
    if max_order is not None and g.n * h.n > max_order:
        raise InvalidInput(f"product order {g.n * h.n} exceeds the size budget "
                           f"{max_order}")
    return ProductGraph(g, h)


# Projections, fibers and cells


def projections(pg: ProductGraph, x) -> tuple[VertexSet, VertexSet]:
    """Coordinate images ``(P_G(x), P_H(x))`` of a product vertex set."""
    mask = as_mask(pg, x)
    pgm = phm = 0
    for v in _bits(mask):
        i, j = divmod(v, pg.n2)
        pgm |= 1 << i
        phm |= 1 << j
    return VertexSet(pg.n1, pgm), VertexSet(pg.n2, phm)


def fiber(pg: ProductGraph, j: int) -> VertexSet:
    """The copy of the left factor sitting over vertex ``j`` of the right factor."""
    if not 0 <= j < pg.n2:
        raise InvalidInput(f"fiber index {j} out of range 0..{pg.n2 - 1}")
    return VertexSet.of(pg.n, (i * pg.n2 + j for i in range(pg.n1)))


def cell(pg: ProductGraph, c, j: int) -> VertexSet:
    """``{(i, j) : i in c}`` for a subset ``c`` of the left factor."""
    if not 0 <= j < pg.n2:
        raise InvalidInput(f"cell index {j} out of range 0..{pg.n2 - 1}")
    cm = as_mask(pg.left, c)
    return VertexSet.of(pg.n, (i * pg.n2 + j for i in _bits(cm)))


# Edge-list format


def parse_edge_list(text: str) -> Graph:
    """Parse ``n`` on the first line, then one ``u v`` pair (``u < v``) per line.

    Blank lines and lines starting with ``#`` are skipped.
    """
    n = None
    edges = []
    seen = set()
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 1 or not parts[0].isdigit():
                raise InvalidInput(f"line {lineno}: expected vertex count, got {raw!r}")
            n = int(parts[0])
            continue
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise InvalidInput(f"line {lineno}: malformed edge {raw!r}")
        u, v = int(parts[0]), int(parts[1])
        if u == v:
            raise InvalidInput(f"line {lineno}: self-loop at vertex {u}")
        if u > v:
            raise InvalidInput(f"line {lineno}: edge must be written as 'u v' with u < v")
        if v >= n:
            raise InvalidInput(f"line {lineno}: vertex {v} >= n={n}")
        if (u, v) in seen:
            raise InvalidInput(f"line {lineno}: duplicate edge {u} {v}")
        seen.add((u, v))
        edges.append((u, v))
    if n is None:
        raise InvalidInput("line 1: missing vertex count")
    return Graph(n, edges)


def serialize_edge_list(g: Graph) -> str:
    lines = [str(g.n)] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"
