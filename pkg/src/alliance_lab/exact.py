"""Exact exponential solvers used as ground truth.

Two independent strategies are provided for the minimisation problems:

``enumerate``
    Combinations by increasing cardinality.  Simple enough to trust, slow
    beyond ~16 vertices.  It is the reference oracle in the tests.

``bnb``
    Depth-first branch and bound over vertices in index order, trying
    "vertex in the set" before "vertex out".  Pruning uses the incumbent, a
    greedy initial upper bound and a transposition table keyed on the
    search frontier.  Only strictly better solutions replace the incumbent,
    which makes the returned witness the lexicographically smallest optimal
    set, the same one ``enumerate`` finds.

Global offensive alliances are searched through their complements: ``S`` is an
alliance iff every vertex ``v`` of ``T = V - S`` has at most
``(d(v) - 1) // 2`` neighbors in ``T``.  That constraint is hereditary, so the
search only ever has to check the vertex being added and its ``T``-neighbors.
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Callable

from .errors import BudgetExceeded, InconsistencyError, InvalidInput
from .graph import Graph, VertexSet, bits
from . import verify

GAMMA = "gamma"
GAMMA_O = "gamma_o"
ALPHA = "alpha"
ALPHA2 = "alpha2"
EDS = "eds"

BNB = "bnb"
ENUMERATE = "enumerate"

DEFAULT_MAX_ORDER = 64


@dataclass(frozen=True)
class Budget:
    """Search limits.  ``nodes`` is per search task; ``seconds`` is wall clock."""

    nodes: int | None = None
    seconds: float | None = None


UNLIMITED = Budget()


@dataclass
class SolveResult:
    quantity: str
    value: int
    witness: VertexSet
    nodes_explored: int = 0
    elapsed: float = 0.0
    strategy: str = BNB
    equals_domination_number: bool | None = None

    def to_dict(self) -> dict:
        d = {
            "quantity": self.quantity,
            "value": self.value,
            "witness": self.witness.tolist(),
            "nodes_explored": self.nodes_explored,
            "strategy": self.strategy,
        }
        if self.equals_domination_number is not None:
            d["equals_domination_number"] = self.equals_domination_number
        return d


class _Clock:
    def __init__(self, budget: Budget, deadline: float | None = None):
        self.limit = budget.nodes
        if deadline is None and budget.seconds is not None:
            deadline = time.monotonic() + budget.seconds
        self.deadline = deadline
        self.nodes = 0

    def tick(self) -> None:
        self.nodes += 1
        if self.limit is not None and self.nodes > self.limit:
            raise BudgetExceeded(f"node budget {self.limit} exhausted", nodes=self.nodes)
        if self.deadline is not None and not self.nodes & 1023:
            if time.monotonic() > self.deadline:
                raise BudgetExceeded("time budget exhausted", nodes=self.nodes)


class _Found(Exception):
    pass


def _check_order(g: Graph, max_order: int | None) -> None:
    if g.n < 1:
        raise InvalidInput("graph must have at least one vertex")
    if max_order is not None and g.n > max_order:
        raise InvalidInput(f"graph order {g.n} exceeds the solver size budget {max_order}")


# Lower bounds that do not depend on any closed formula


def degree_counting_floor(g: Graph) -> int:
    """Every outside vertex needs ``ceil((delta+1)/2)`` inside neighbors and every
    inside vertex supplies at most ``Delta`` of them."""
    n, lo_deg, hi_deg = g.n, g.min_degree, g.max_degree
    c = (lo_deg + 2) // 2
    return max(1, -(-n * c // (hi_deg + c)))


def domination_floor(g: Graph) -> int:
    return max(1, -(-g.n // (g.max_degree + 1)))


# Global offensive alliance: branch and bound over complements


class _AllianceSearch:
    """Maximise ``|T|`` subject to per-vertex caps on ``T``-degree."""

    def __init__(self, g: Graph, caps: list[int], clock: _Clock, best: int, floor: int):
        n = g.n
        self.n = n
        self.rows = g.rows
        self.caps = caps
        self.clock = clock
        self.best = best          # prune when |S| >= best
        self.best_t: int | None = None
        self.floor = floor
        self.res = [0] * n
        later = [0] * (n + 1)
        for k in range(n - 1, -1, -1):
            later[k] = later[k + 1] | 1 << k
        self.flist = [[u for u in range(k) if g.rows[u] & later[k]] for k in range(n + 1)]
        self.memo: list[dict] = [dict() for _ in range(n + 1)]

    def try_add(self, k: int, t: int) -> int | None:
        """Put vertex k into T; return the T-neighbor mask, or None if infeasible."""
        tn = self.rows[k] & t
        cnt = tn.bit_count()
        if cnt > self.caps[k]:
            return None
        res = self.res
        for u in bits(tn):
            if res[u] <= 0:
                return None
        for u in bits(tn):
            res[u] -= 1
        res[k] = self.caps[k] - cnt
        return tn

    def undo(self, tn: int) -> None:
        for u in bits(tn):
            self.res[u] += 1

    def dfs(self, k: int, t: int, s_size: int) -> None:
        self.clock.tick()
        if s_size >= self.best:
            return
        if k == self.n:
            self.best = s_size
            self.best_t = t
            if s_size <= self.floor:
                raise _Found
            return
        res = self.res
        key = tuple([res[u] if t >> u & 1 else -1 for u in self.flist[k]])
        memo = self.memo[k]
        prev = memo.get(key)
        if prev is not None and prev <= s_size:
            return
        memo[key] = s_size
        self.dfs(k + 1, t, s_size + 1)
        tn = self.try_add(k, t)
        if tn is not None:
            self.dfs(k + 1, t | 1 << k, s_size)
            self.undo(tn)

    def run(self, prefix: tuple[bool, ...] = ()) -> None:
        """Search with the first ``len(prefix)`` vertices fixed (True = in S)."""
        t, s_size, undo = 0, 0, []
        for k, in_s in enumerate(prefix):
            if in_s:
                s_size += 1
                continue
            tn = self.try_add(k, t)
            if tn is None:
                return
            undo.append(tn)
            t |= 1 << k
        try:
            self.dfs(len(prefix), t, s_size)
        except _Found:
            pass
        finally:
            for tn in reversed(undo):
                self.undo(tn)


def _alliance_caps(g: Graph) -> list[int]:
    return [(d - 1) // 2 for d in g.degrees()]


def greedy_alliance(g: Graph) -> int:
    """Mask of a (not necessarily minimum) global offensive alliance."""
    caps = _alliance_caps(g)
    res = [0] * g.n
    t = 0
    for v in sorted(range(g.n), key=lambda v: (g.degree(v), v)):
        tn = g.rows[v] & t
        if tn.bit_count() <= caps[v] and all(res[u] > 0 for u in bits(tn)):
            for u in bits(tn):
                res[u] -= 1
            res[v] = caps[v] - tn.bit_count()
            t |= 1 << v
    s = g.full_mask & ~t
    if not s:
        s = 1
    return s


# Dominating sets: branch and bound


class _DominationSearch:
    def __init__(self, g: Graph, clock: _Clock, best: int, floor: int):
        n = g.n
        self.n = n
        self.closed = [g.rows[v] | 1 << v for v in range(n)]
        self.clock = clock
        self.best = best
        self.best_s: int | None = None
        self.floor = floor
        self.span = g.max_degree + 1
        last = [max(bits(self.closed[v])) for v in range(n)]
        self.closers = [0] * n
        for v in range(n):
            self.closers[last[v]] |= 1 << v
        # vertices whose closed neighborhood is not yet fully decided before step k
        self.open = [0] * (n + 1)
        for k in range(n + 1):
            self.open[k] = sum(1 << v for v in range(n) if last[v] >= k)
        self.memo: list[dict] = [dict() for _ in range(n + 1)]

    def dfs(self, k: int, s: int, dom: int, s_size: int) -> None:
        self.clock.tick()
        if k == self.n:
            if s_size < self.best:
                self.best = s_size
                self.best_s = s
                if s_size <= self.floor:
                    raise _Found
            return
        open_k = self.open[k]
        missing = (open_k & ~dom).bit_count()
        if s_size + -(-missing // self.span) >= self.best:
            return
        key = dom & open_k
        memo = self.memo[k]
        prev = memo.get(key)
        if prev is not None and prev <= s_size:
            return
        memo[key] = s_size
        closing = self.closers[k]
        dom_in = dom | self.closed[k]
        if not closing & ~dom_in:
            self.dfs(k + 1, s | 1 << k, dom_in, s_size + 1)
        if not closing & ~dom:
            self.dfs(k + 1, s, dom, s_size)

    def run(self, prefix: tuple[bool, ...] = ()) -> None:
        s = dom = 0
        for k, in_s in enumerate(prefix):
            if in_s:
                s |= 1 << k
                dom |= self.closed[k]
            if self.closers[k] & ~dom:
                return
        try:
            self.dfs(len(prefix), s, dom, s.bit_count())
        except _Found:
            pass


def greedy_dominating(g: Graph) -> int:
    closed = [g.rows[v] | 1 << v for v in range(g.n)]
    s = dom = 0
    while dom != g.full_mask:
        v = max(range(g.n), key=lambda v: ((closed[v] & ~dom).bit_count(), -v))
        s |= 1 << v
        dom |= closed[v]
    return s


# Parallel driver


def _split_prefixes(depth: int) -> list[tuple[bool, ...]]:
    # in-set branch first, matching the serial search order
    return list(product((True, False), repeat=depth))


def _run_task(args):
    kind, g, prefix, best, floor, budget, deadline = args
    clock = _Clock(budget, deadline)
    try:
        if kind == GAMMA_O:
            search = _AllianceSearch(g, _alliance_caps(g), clock, best, floor)
            search.run(prefix)
            found = None if search.best_t is None else g.full_mask & ~search.best_t
        else:
            search = _DominationSearch(g, clock, best, floor)
            search.run(prefix)
            found = search.best_s
    except BudgetExceeded as exc:
        return ("abort", clock.nodes, str(exc))
    return ("ok", clock.nodes, found)


def _bnb_component(kind: str, g: Graph, budget: Budget, workers: int,
                   split_depth: int | None) -> tuple[int, int]:
    """Minimum set mask for a connected graph, plus nodes explored."""
    if kind == GAMMA_O:
        greedy, floor = greedy_alliance(g), degree_counting_floor(g)
    else:
        greedy, floor = greedy_dominating(g), domination_floor(g)
    best = greedy.bit_count() + 1
    deadline = None if budget.seconds is None else time.monotonic() + budget.seconds
    if split_depth is None:
        split_depth = 0 if workers <= 1 else max(1, math.ceil(math.log2(workers)) + 2)
    split_depth = min(split_depth, g.n)
    tasks = [(kind, g, prefix, best, floor, budget, deadline)
             for prefix in _split_prefixes(split_depth)]
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(_run_task, tasks))
    else:
        outcomes = []
        for task in tasks:
            outcomes.append(_run_task(task))
            if outcomes[-1][0] == "abort":
                break
    nodes = sum(o[1] for o in outcomes)
    chosen = None
    for status, _, found in outcomes:
        if status == "abort":
            raise BudgetExceeded(found, lo=floor, hi=greedy.bit_count(), nodes=nodes)
        if found is not None and (chosen is None or found.bit_count() < chosen.bit_count()):
            chosen = found
    if chosen is None:
        chosen = greedy
    return chosen, nodes


# Enumeration oracle


def _goa_mask_ok(g: Graph, mask: int) -> bool:
    rows = g.rows
    for v in range(g.n):
        if not mask >> v & 1:
            d = len(g.neighbors(v))
            if 2 * (rows[v] & ~mask).bit_count() + 1 > d:
                return False
    return True


def _dom_mask_ok(g: Graph, mask: int) -> bool:
    rows = g.rows
    return all(mask >> v & 1 or rows[v] & mask for v in range(g.n))


def _enumerate_min(g: Graph, ok: Callable[[Graph, int], bool], clock: _Clock,
                   start: int = 1) -> int:
    for k in range(start, g.n + 1):
        for combo in combinations(range(g.n), k):
            clock.tick()
            mask = 0
            for v in combo:
                mask |= 1 << v
            if ok(g, mask):
                return mask
    raise InconsistencyError("no feasible set found by enumeration")


def _enumerate_max(g: Graph, ok: Callable[[Graph, int], bool], clock: _Clock) -> int:
    for k in range(g.n, -1, -1):
        for combo in combinations(range(g.n), k):
            clock.tick()
            mask = 0
            for v in combo:
                mask |= 1 << v
            if ok(g, mask):
                return mask
    raise InconsistencyError("no feasible set found by enumeration")


# Public solvers


def _by_components(g: Graph, solve_one: Callable[[Graph], tuple[int, int]]) -> tuple[int, int]:
    comps = g.components()
    if len(comps) == 1:
        return solve_one(g)
    total_mask = nodes = 0
    for comp in comps:
        verts = list(bits(comp))
        mask, used = solve_one(g.induced(comp))
        nodes += used
        for idx in bits(mask):
            total_mask |= 1 << verts[idx]
    return total_mask, nodes


def _minimum(kind: str, g: Graph, strategy: str, budget: Budget, workers: int,
             split_depth: int | None, max_order: int | None) -> SolveResult:
    _check_order(g, max_order)
    started = time.perf_counter()
    if strategy == BNB:
        def solve_one(c):
            return _bnb_component(kind, c, budget, workers, split_depth)
    elif strategy == ENUMERATE:
        ok = _goa_mask_ok if kind == GAMMA_O else _dom_mask_ok
        floor = degree_counting_floor if kind == GAMMA_O else domination_floor

        def solve_one(c):
            clock = _Clock(budget)
            try:
                return _enumerate_min(c, ok, clock, floor(c)), clock.nodes
            except BudgetExceeded as exc:
                exc.lo = floor(c)
                raise
    else:
        raise InvalidInput(f"unknown strategy {strategy!r}")
    mask, nodes = _by_components(g, solve_one)
    witness = VertexSet(g.n, mask)
    check = (verify.is_global_offensive_alliance if kind == GAMMA_O
             else verify.is_dominating_set)
    if not check(g, witness):
        raise InconsistencyError(f"{kind} witness failed re-verification")
    return SolveResult(kind, len(witness), witness, nodes,
                       time.perf_counter() - started, strategy)


def domination_number(g: Graph, *, strategy: str = BNB, budget: Budget = UNLIMITED,
                      workers: int = 1, split_depth: int | None = None,
                      max_order: int | None = DEFAULT_MAX_ORDER) -> SolveResult:
    """Minimum dominating set; summed over components."""
    return _minimum(GAMMA, g, strategy, budget, workers, split_depth, max_order)


def global_offensive_alliance_number(g: Graph, *, strategy: str = BNB,
                                     budget: Budget = UNLIMITED, workers: int = 1,
                                     split_depth: int | None = None,
                                     max_order: int | None = DEFAULT_MAX_ORDER
                                     ) -> SolveResult:
    """Minimum global offensive alliance; summed over components."""
    return _minimum(GAMMA_O, g, strategy, budget, workers, split_depth, max_order)


def _mis(g: Graph, clock: _Clock) -> int:
    rows = g.rows
    greedy = 0
    cand = g.full_mask
    while cand:
        v = min(bits(cand), key=lambda v: ((rows[v] & cand).bit_count(), v))
        greedy |= 1 << v
        cand &= ~(rows[v] | 1 << v)
    state = {"best": greedy.bit_count() - 1, "set": greedy}

    def rec(cand: int, cur: int, size: int) -> None:
        clock.tick()
        if size + cand.bit_count() <= state["best"]:
            return
        if not cand:
            state["best"], state["set"] = size, cur
            return
        low = cand & -cand
        v = low.bit_length() - 1
        rec(cand & ~rows[v] & ~low, cur | low, size + 1)
        rec(cand & ~low, cur, size)

    rec(g.full_mask, 0, 0)
    return state["set"]


def _induces_bipartite(g: Graph, mask: int) -> bool:
    color = {}
    rows = g.rows
    for s in bits(mask):
        if s in color:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for w in bits(rows[v] & mask):
                if w not in color:
                    color[w] = color[v] ^ 1
                    stack.append(w)
                elif color[w] == color[v]:
                    return False
    return True


def _max_bipartite(g: Graph, clock: _Clock) -> int:
    n = g.n
    state = {"best": -1, "set": 0}

    def rec(k: int, cur: int, size: int) -> None:
        clock.tick()
        if size + (n - k) <= state["best"]:
            return
        if k == n:
            state["best"], state["set"] = size, cur
            return
        nxt = cur | 1 << k
        if _induces_bipartite(g, nxt):
            rec(k + 1, nxt, size + 1)
        rec(k + 1, cur, size)

    rec(0, 0, 0)
    return state["set"]


def _maximum(kind: str, g: Graph, strategy: str, budget: Budget,
             max_order: int | None) -> SolveResult:
    _check_order(g, max_order)
    started = time.perf_counter()
    clock = _Clock(budget)
    if kind == ALPHA:
        ok = lambda g, m: verify.is_independent(g, VertexSet(g.n, m))  # noqa: E731
        bnb = _mis
    else:
        ok = _induces_bipartite
        bnb = _max_bipartite
    try:
        if strategy == BNB:
            mask = bnb(g, clock)
        elif strategy == ENUMERATE:
            mask = _enumerate_max(g, ok, clock)
        else:
            raise InvalidInput(f"unknown strategy {strategy!r}")
    except BudgetExceeded as exc:
        exc.lo, exc.hi = 1, g.n
        raise
    if not ok(g, mask):
        raise InconsistencyError(f"{kind} witness failed re-verification")
    witness = VertexSet(g.n, mask)
    return SolveResult(kind, len(witness), witness, clock.nodes,
                       time.perf_counter() - started, strategy)


def independence_number(g: Graph, *, strategy: str = BNB, budget: Budget = UNLIMITED,
                        max_order: int | None = DEFAULT_MAX_ORDER) -> SolveResult:
    return _maximum(ALPHA, g, strategy, budget, max_order)


def bipartite_number(g: Graph, *, strategy: str = BNB, budget: Budget = UNLIMITED,
                     max_order: int | None = DEFAULT_MAX_ORDER) -> SolveResult:
    """Order of a largest vertex subset inducing an odd-cycle-free subgraph."""
    return _maximum(ALPHA2, g, strategy, budget, max_order)


def radius(g: Graph) -> int:
    if not g.is_connected():
        raise InvalidInput("radius is only defined here for connected graphs")
    return min(max(g.distances_from(v)) for v in range(g.n))


# Efficient dominating sets


def efficient_dominating_sets(g: Graph, *, max_size: int | None = None,
                              budget: Budget = UNLIMITED) -> list[int]:
    """Masks of all efficient dominating sets (perfect codes), optionally capped in size.

    Exact cover of V by closed neighborhoods: repeatedly cover the lowest
    uncovered vertex with some closed neighborhood disjoint from the cover.
    """
    clock = _Clock(budget)
    closed = [g.rows[v] | 1 << v for v in range(g.n)]
    full = g.full_mask
    found = []

    def rec(covered: int, chosen: int, size: int) -> None:
        clock.tick()
        if covered == full:
            found.append(chosen)
            return
        if max_size is not None and size >= max_size:
            return
        low = ~covered & (covered + 1)
        u = low.bit_length() - 1
        for w in bits(closed[u]):
            if not closed[w] & covered:
                rec(covered | closed[w], chosen | 1 << w, size + 1)

    rec(0, 0, 0)
    return found


def _lex_key(mask: int) -> tuple[int, tuple[int, ...]]:
    return mask.bit_count(), tuple(bits(mask))


def find_efficient_dominating_set(g: Graph, *, budget: Budget = UNLIMITED,
                                  max_order: int | None = DEFAULT_MAX_ORDER
                                  ) -> SolveResult | None:
    """A minimum-cardinality efficient dominating set, or None if there is none.

    ``equals_domination_number`` reports whether its size equals gamma(g).
    """
    _check_order(g, max_order)
    started = time.perf_counter()
    sets = efficient_dominating_sets(g, budget=budget)
    if not sets:
        return None
    mask = min(sets, key=_lex_key)
    witness = VertexSet(g.n, mask)
    if not verify.is_efficient_dominating_set(g, witness):
        raise InconsistencyError("efficient dominating set failed re-verification")
    gamma = domination_number(g, budget=budget, max_order=max_order).value
    return SolveResult(EDS, len(witness), witness, 0, time.perf_counter() - started,
                       BNB, equals_domination_number=len(witness) == gamma)


def is_star(g: Graph) -> bool:
    """True for ``S_{1,m}``, m >= 1 (so K_2 counts)."""
    if g.n < 2 or g.m != g.n - 1 or not g.is_connected():
        return False
    return g.max_degree == g.n - 1


def star_characterization(g: Graph, *, budget: Budget = UNLIMITED) -> bool:
    """Whether some efficient dominating set of size gamma(g) is also a global
    offensive alliance.  Computed directly, independent of :func:`is_star`."""
    if not g.is_connected():
        raise InvalidInput("star characterization needs a connected graph")
    gamma = domination_number(g, budget=budget).value
    for mask in efficient_dominating_sets(g, max_size=gamma, budget=budget):
        if mask.bit_count() == gamma and verify.is_global_offensive_alliance(
                g, VertexSet(g.n, mask)):
            return True
    return False
