"""Command-line front end; every command prints one JSON report to stdout.

Exit codes: 0 success, 1 invalid input, 2 budget or iteration limit reached,
3 internal inconsistency.  Wall-clock figures live under the ``timing`` key so
the rest of a report is byte-stable across runs.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import __version__, constructions, exact, formulas, spectral, verify
from .conjecture import SweepConfig, check_vizing_like, sweep
from .errors import (BudgetExceeded, ConvergenceError, InconsistencyError,
                     InvalidInput)
from .graph import (CYCLE, PATH, FamilySpec, Graph, ProductGraph, ProductSpec, VertexSet,
                    build_family, cartesian_product, parse_edge_list, parse_family,
                    serialize_edge_list)

SCHEMA = "alliance-lab/1"


# ---------------------------------------------------------------- operands

def _graph_operand(path: str):
    return ("graph", path)


def _family_operand(expr: str):
    return ("family", expr)


def _load(op) -> Graph:
    kind, value = op
    if kind == "family":
        return build_family(parse_family(value), max_order=exact.DEFAULT_MAX_ORDER)
    try:
        with open(value, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InvalidInput(f"cannot read graph file {value!r}: {exc.strerror}") from None
    return parse_edge_list(text)


def _describe(op) -> dict:
    return {op[0]: op[1]}


def _operands(args) -> list:
    return args.operands or []


def _one_graph(args) -> Graph:
    ops = _operands(args)
    if len(ops) != 1:
        raise InvalidInput("expected exactly one --graph or --family")
    return _load(ops[0])


def _two_graphs(args) -> tuple[Graph, Graph]:
    """Two factors: either two operands, or one product family expression."""
    ops = _operands(args)
    if len(ops) == 2:
        return _load(ops[0]), _load(ops[1])
    if len(ops) == 1 and ops[0][0] == "family":
        spec = parse_family(ops[0][1])
        if isinstance(spec, ProductSpec):
            return build_family(spec.left), build_family(spec.right)
    raise InvalidInput("expected two factor graphs or one product family 'AxB'")


def _product(args) -> ProductGraph:
    ops = _operands(args)
    if len(ops) == 1:
        g = _load(ops[0])
        if isinstance(g, ProductGraph):
            return g
    g, h = _two_graphs(args)
    return cartesian_product(g, h, max_order=exact.DEFAULT_MAX_ORDER)


def _family_spec(args) -> FamilySpec | ProductSpec:
    ops = _operands(args)
    if len(ops) != 1 or ops[0][0] != "family":
        raise InvalidInput("expected exactly one --family expression")
    return parse_family(ops[0][1])


def _parse_set(g: Graph, text: str) -> VertexSet:
    """Comma-separated vertex indices; on products ``i:j`` names a pair."""
    out = []
    for token in text.replace(" ", "").split(","):
        if not token:
            continue
        try:
            if ":" in token:
                if not isinstance(g, ProductGraph):
                    raise InvalidInput(f"pair {token!r} given for a non-product graph")
                i, j = (int(x) for x in token.split(":"))
                if not (0 <= i < g.n1 and 0 <= j < g.n2):
                    raise InvalidInput(f"pair {token!r} out of range")
                out.append(g.index(i, j))
            else:
                out.append(int(token))
        except ValueError:
            raise InvalidInput(f"bad vertex {token!r} in --set") from None
    for v in out:
        if not 0 <= v < g.n:
            raise InvalidInput(f"vertex {v} out of range for n={g.n}")
    return VertexSet.of(g.n, out)


def _one_set(args, g: Graph) -> VertexSet:
    if not args.set or len(args.set) != 1:
        raise InvalidInput("expected exactly one --set")
    return _parse_set(g, args.set[0])


def _budget(args) -> exact.Budget:
    return exact.Budget(nodes=args.budget_nodes, seconds=args.budget_seconds)


def _graph_info(g: Graph) -> dict:
    d = {"n": g.n, "m": g.m, "edges": [list(e) for e in g.edges]}
    if g.family is not None:
        d["family"] = g.family.label
    return d


def _write_out(args, text: str) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)


# ---------------------------------------------------------------- commands

def cmd_gen(args) -> dict:
    g = _one_graph(args)
    _write_out(args, serialize_edge_list(g))
    return {"graph": _graph_info(g)}


def cmd_product(args) -> dict:
    g, h = _two_graphs(args)
    pg = cartesian_product(g, h, max_order=exact.DEFAULT_MAX_ORDER)
    _write_out(args, serialize_edge_list(pg))
    return {"left": _graph_info(g), "right": _graph_info(h), "graph": _graph_info(pg),
            "labeling": "vertex (i, j) has index i * n_right + j"}


_VERIFIERS = {
    "dom": verify.is_dominating_set,
    "goa": verify.is_global_offensive_alliance,
    "strong": verify.is_global_strong_offensive_alliance,
    "eds": verify.is_efficient_dominating_set,
}


def cmd_verify(args) -> dict:
    what = args.what
    if what == "square-lemma":
        pg = _product(args)
        s = _one_set(args, pg)
        cert = verify.check_square_lemma(pg, s)
        return {"check": what, "set": s.tolist(), "certificate": cert.to_dict()}
    g = _one_graph(args)
    if what == "partition":
        if not args.set:
            raise InvalidInput("partition needs one --set per part")
        parts = [_parse_set(g, text) for text in args.set]
        cert = verify.check_partition(g, parts, args.mode or verify.BOTH_GOA)
        return {"check": what, "mode": args.mode or verify.BOTH_GOA,
                "parts": [p.tolist() for p in parts], "certificate": cert.to_dict()}
    s = _one_set(args, g)
    cert = _VERIFIERS[what](g, s)
    return {"check": what, "set": s.tolist(), "certificate": cert.to_dict()}


def cmd_solve(args) -> dict:
    g = _one_graph(args)
    what = args.what
    opts = dict(strategy=args.strategy, budget=_budget(args))
    if what == "gamma":
        return exact.domination_number(g, workers=args.workers, **opts).to_dict()
    if what == "gamma-o":
        return exact.global_offensive_alliance_number(g, workers=args.workers,
                                                      **opts).to_dict()
    if what == "alpha":
        return exact.independence_number(g, **opts).to_dict()
    if what == "alpha2":
        return exact.bipartite_number(g, **opts).to_dict()
    if what == "radius":
        value = exact.radius(g)
        ecc = [max(g.distances_from(v)) for v in range(g.n)]
        center = ecc.index(value)
        return {"quantity": "radius", "value": value, "center": center,
                "distances_from_center": list(g.distances_from(center))}
    if what == "eds":
        res = exact.find_efficient_dominating_set(g, budget=_budget(args))
        if res is None:
            return {"quantity": "eds", "exists": False}
        return {"exists": True, **res.to_dict()}
    # star-char: an efficient dominating set of size gamma that is also an alliance
    holds = exact.star_characterization(g, budget=_budget(args))
    return {"quantity": "star-char", "characterization": holds,
            "is_star": exact.is_star(g),
            "gamma": exact.domination_number(g, budget=_budget(args)).to_dict()}


def cmd_formula(args) -> dict:
    return formulas.closed_formula(_family_spec(args)).to_dict()


def cmd_bounds(args) -> dict:
    g, h = _two_graphs(args)
    return formulas.bound_envelope(g, h).to_dict()


def _spec_pair(args, right_kind: str) -> tuple[int, int]:
    spec = _family_spec(args)
    if (not isinstance(spec, ProductSpec) or not isinstance(spec.left, FamilySpec)
            or not isinstance(spec.right, FamilySpec) or spec.left.kind != PATH
            or spec.right.kind != right_kind):
        want = "PrxPt" if right_kind == PATH else "PrxCt"
        raise InvalidInput(f"expected a family of the form {want}")
    return spec.left.size, spec.right.size


def cmd_construct(args) -> dict:
    what = args.what
    if what == "grid":
        built = constructions.grid_goa(*_spec_pair(args, PATH))
    elif what == "cylinder":
        built = constructions.cylinder_goa(*_spec_pair(args, CYCLE))
    elif what == "partition":
        spec = _family_spec(args)
        if not isinstance(spec, ProductSpec):
            raise InvalidInput("partition construction needs a product family 'AxB'")
        g, h = build_family(spec.left), build_family(spec.right)
        mode = args.mode or "goa-strong"
        if mode == "complete-half":
            gx = None
            y1, y2, _ = constructions.canonical_two_partition(spec.right)
        else:
            x1, x2, _ = constructions.canonical_two_partition(spec.left)
            y1, y2, _ = constructions.canonical_two_partition(spec.right)
            gx = (x1, x2)
        built = constructions.product_partition_goa(g, h, gx, (y1, y2), mode)
    else:
        g = _one_graph(args)
        built = constructions.complement_of_independent_set(g, _one_set(args, g))
    return built.to_dict()


def cmd_spectral(args) -> dict:
    g = _one_graph(args)
    res = spectral.laplacian_spectral_radius(g)
    out = res.to_dict()
    if g.n >= 2 and g.is_connected():
        out["lower_bound"] = spectral.spectral_lower_bound(g)
    return out


def cmd_conjecture(args) -> dict:
    if args.what == "check":
        g, h = _two_graphs(args)
        return check_vizing_like(g, h, budget=_budget(args), workers=args.workers).to_dict()
    if args.random is not None:
        config = SweepConfig(generator="random", seed=args.seed, count=args.random,
                             n_min=args.min_n, n_max=args.max_n,
                             edge_probability=args.p, budget=_budget(args),
                             workers=args.workers)
    else:
        config = SweepConfig(seed=args.seed, max_factor_order=args.max_order,
                             budget=_budget(args), workers=args.workers)
    records = [r.to_dict() for r in sweep(config, args.violations)]
    if args.out:
        _write_out(args, "".join(json.dumps(r, sort_keys=True) + "\n" for r in records))
    return {"reports": records[:-1], "summary": records[-1]}


# ---------------------------------------------------------------- parser

def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--graph", dest="operands", action="append", type=_graph_operand,
                   help="edge-list file (repeatable for two-factor commands)")
    p.add_argument("--family", dest="operands", action="append", type=_family_operand,
                   help='family expression such as "P4", "C6xK3", "Q3"')
    p.add_argument("--set", action="append", help="comma-separated vertices (i or i:j)")
    p.add_argument("--budget-nodes", type=int, default=None)
    p.add_argument("--budget-seconds", type=float, default=None)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None, help="write the graph / stream here too")
    p.add_argument("--violations", default=None, help="JSON-lines file for violations")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="alliance-lab",
                                     description="Offensive alliances in graph products.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name, func, help_text, choices=None):
        p = sub.add_parser(name, help=help_text)
        if choices:
            p.add_argument("what", choices=choices)
        _add_common(p)
        p.set_defaults(func=func)
        return p

    command("gen", cmd_gen, "build a graph and print it")
    command("product", cmd_product, "Cartesian product of two graphs")
    p = command("verify", cmd_verify, "check a vertex set",
                ["dom", "goa", "strong", "eds", "partition", "square-lemma"])
    p.add_argument("--mode", choices=list(verify.PARTITION_MODES))
    p = command("solve", cmd_solve, "exact graph parameters",
                ["gamma", "gamma-o", "alpha", "alpha2", "radius", "eds", "star-char"])
    p.add_argument("--strategy", choices=[exact.BNB, exact.ENUMERATE], default=exact.BNB)
    command("formula", cmd_formula, "closed formula for a product family")
    command("bounds", cmd_bounds, "all applicable bounds and their intersection")
    p = command("construct", cmd_construct, "explicit alliances",
                ["grid", "cylinder", "partition", "complement-is"])
    p.add_argument("--mode", choices=["two-goa", "goa-strong", "complete-half"])
    command("spectral", cmd_spectral, "Laplacian spectral radius and bound")
    p = command("conjecture", cmd_conjecture, "product inequality checks",
                ["check", "sweep"])
    p.add_argument("--random", type=int, default=None, metavar="COUNT",
                   help="sweep COUNT random pairs instead of family pairs")
    p.add_argument("--min-n", type=int, default=2)
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--p", type=float, default=0.5, help="edge probability")
    p.add_argument("--max-order", type=int, default=5, help="largest family factor")
    return parser


def _emit(argv, args, result, elapsed: float) -> None:
    report = {
        "schema": SCHEMA,
        "tool": {"name": "alliance-lab", "version": __version__},
        "command": list(argv),
        "inputs": [_describe(op) for op in (getattr(args, "operands", None) or [])],
        "result": result,
        "timing": {"elapsed_seconds": round(elapsed, 6)},
    }
    sys.stdout.write(json.dumps(report, sort_keys=True, indent=2) + "\n")


def run(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; that code is reserved for budgets
        return 0 if exc.code == 0 else 1
    start = time.perf_counter()
    try:
        result = args.func(args)
    except InvalidInput as exc:
        print(f"alliance-lab: invalid input: {exc}", file=sys.stderr)
        return 1
    except BudgetExceeded as exc:
        print(f"alliance-lab: budget exceeded: {exc}", file=sys.stderr)
        _emit(argv, args, {"status": "budget-exceeded", "lo": exc.lo, "hi": exc.hi,
                           "nodes_explored": exc.nodes}, time.perf_counter() - start)
        return 2
    except ConvergenceError as exc:
        print(f"alliance-lab: {exc}", file=sys.stderr)
        _emit(argv, args, {"status": "not-converged", "estimate": exc.estimate,
                           "residual": exc.residual}, time.perf_counter() - start)
        return 2
    except InconsistencyError as exc:
        print(f"alliance-lab: internal inconsistency: {exc}", file=sys.stderr)
        return 3
    _emit(argv, args, result, time.perf_counter() - start)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
