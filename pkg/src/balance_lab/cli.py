"""Command line entry point.

Exit codes: 0 success, 3 a legitimate "none found" (or a verified claim
that failed), 2 usage error, 1 internal error.
"""

from __future__ import annotations

import argparse
import json
import os
import secrets
import sys
from fractions import Fraction

from . import constructions, engines, extremal, formulas, oracle
from .coloring import ListColoring, stats, to_dot
from .graph import girth, parse_target
from .search import BalancedWitness, default_workers, find_balanced_copy

EXIT_OK, EXIT_BUG, EXIT_USAGE, EXIT_NONE = 0, 1, 2, 3


def _workers(value: str | None) -> int:
    if value is None:
        return default_workers()
    if value == "auto":
        return os.cpu_count() or 1
    return max(1, int(value))


def _read_coloring(path: str) -> ListColoring:
    text = sys.stdin.read() if path == "-" else open(path).read()
    return ListColoring.from_json(text)


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True, indent=2, default=_jsonable))


def _jsonable(x):
    if isinstance(x, Fraction):
        return formulas.format_rational(x)
    raise TypeError(f"cannot serialize {type(x).__name__}")


def _graph_info(g) -> dict:
    return {"n": g.n, "m": g.m, "graph6": g.to_graph6(), "edges": [list(e) for e in g.edges()]}


def _pairs(text: str) -> list[tuple[int, int]]:
    out = []
    for chunk in filter(None, text.split(";")):
        u, v = chunk.split(",")
        out.append((int(u), int(v)))
    return out


# -- handlers ---------------------------------------------------------------

def cmd_named(a) -> int:
    g = parse_target(a.token)
    _emit({"token": a.token, **_graph_info(g)})
    return EXIT_OK


def cmd_girth(a) -> int:
    g = parse_target(a.target)
    val = girth(g)
    print("inf" if val == float("inf") else val)
    return EXIT_OK


def cmd_half_family(a) -> int:
    fam = extremal.half_family(parse_target(a.target))
    _emit({"target": a.target, "count": len(fam), "members": [_graph_info(h) for h in fam.members]})
    return EXIT_OK


def cmd_ex(a) -> int:
    fam = extremal.parse_family(a.family)
    res = extremal.ex_search(a.n, fam, workers=_workers(a.workers))
    _emit({
        "n": a.n,
        "family": a.family,
        "value": res.value,
        "extremal_graph": res.extremal_graph.to_graph6(),
        "graphs_examined": res.graphs_examined,
        "level_sizes": list(res.level_sizes),
    })
    return EXIT_OK


def cmd_find_balanced(a) -> int:
    c = _read_coloring(a.coloring)
    g = parse_target(a.target)
    w = find_balanced_copy(c, g, use_bound=not a.no_bound, workers=_workers(a.workers),
                           deterministic=not a.nondeterministic)
    if w is None:
        _emit({"target": a.target, "found": False})
        return EXIT_NONE
    _emit({"target": a.target, "found": True, "witness": w.to_dict(g)})
    return EXIT_OK


def _oracle_out(name, n, target, res: oracle.OracleResult) -> dict:
    return {
        "quantity": name,
        "n": n,
        "target": target,
        "value": res.value,
        "colorings_examined": res.colorings_examined,
        "witness_coloring": None if res.witness_coloring is None else res.witness_coloring.to_dict(),
    }


def cmd_bal_exact(a) -> int:
    res = oracle.bal_exact(a.n, parse_target(a.target), workers=_workers(a.workers))
    _emit(_oracle_out("bal", a.n, a.target, res))
    return EXIT_OK


def cmd_lbal_exact(a) -> int:
    res = oracle.lbal_exact(a.n, parse_target(a.target), workers=_workers(a.workers))
    _emit(_oracle_out("lbal", a.n, a.target, res))
    return EXIT_OK


def cmd_construct(a) -> int:
    kind = a.kind
    if kind == "split":
        c = constructions.split_coloring_c4k(a.n, a.k)
        print(c.to_json(construction="split", k=a.k))
    elif kind == "clique-split":
        c = constructions.clique_split_coloring(a.n, a.a)
        print(c.to_json(construction="clique-split", a=a.a))
    elif kind == "typeb":
        c = constructions.type_b_coloring(a.n, a.t, _pairs(a.rb or ""))
        print(c.to_json(construction="typeb", t=a.t))
    elif kind == "single-edge":
        c = constructions.single_edge_coloring(a.n)
        print(c.to_json(construction="single-edge"))
    else:
        kc = constructions.k5_coloring(a.n, a.eps, seed=a.seed)
        p = kc.params
        print(kc.coloring.to_json(
            construction="k5", epsilon=p.epsilon, k=p.k, k_prime=p.k_prime, m=p.m,
            achieved_m=kc.achieved_m, seed=a.seed,
        ))
    return EXIT_OK


def cmd_engine(a) -> int:
    c = _read_coloring(a.coloring)
    w = _workers(a.workers)
    if a.kind == "odd":
        res = engines.find_balanced_odd_cycle(c, a.k, a.alpha, workers=w)
    elif a.kind == "c4k":
        res = engines.find_balanced_c4k(c, a.k, workers=w)
    else:
        res = engines.find_balanced_c4k2(c, a.k, workers=w)
    _emit({"engine": a.kind, "k": a.k, **res.to_dict()})
    return EXIT_OK if res.witness is not None else EXIT_NONE


def cmd_formula(a) -> int:
    kind = a.kind
    if kind == "bal-odd":
        inp = formulas.CycleFormulaInput(a.n, a.k, a.alpha)
        out = {"value": formulas.bal_odd_cycle(inp), "below_threshold": inp.below_threshold,
               "threshold": formulas.odd_cycle_threshold(a.k)}
    elif kind == "c4k":
        lo, hi = formulas.c4k_bounds(a.n, a.k)
        out = {"lower": lo, "upper_strict": hi}
    elif kind == "lf-ex":
        orders = [int(x) for x in a.orders.split(",")]
        out = {"value": formulas.linear_forest_ex(a.n, orders)}
    elif kind == "k5":
        lo, hi = formulas.k5_bounds(a.n, a.eps)
        out = {"lower": lo, "upper": hi, "c": formulas.K5.c, "upper_coeff": formulas.K5.upper_coeff}
    else:
        out = {"value": formulas.structural_upper_bound(a.n, a.ex)}
    _emit({"formula": kind, **out})
    return EXIT_OK


def cmd_verify(a) -> int:
    seed = a.seed if a.seed is not None else secrets.randbits(64)
    cfg = oracle.VerifyConfig(a.claim, a.n, a.trials, seed, k=a.k, alpha=a.alpha, epsilon=a.eps, excess=a.excess)
    report = oracle.randomized_verify(cfg, workers=_workers(a.workers))
    report["seed_source"] = "given" if a.seed is not None else "auto"
    print(oracle.report_json(report))
    return EXIT_OK if report["all_pass"] else EXIT_NONE


def cmd_export_dot(a) -> int:
    c = _read_coloring(a.coloring)
    edges = []
    if a.witness:
        if not a.target:
            raise ValueError("--witness needs --target")
        g = parse_target(a.target)
        data = json.loads(open(a.witness).read())
        data = data.get("witness", data)
        w = BalancedWitness.from_dict(data, g)
        edges = [(u, v) for u, v, _ in w.host_edges(g)]
    sys.stdout.write(to_dot(c, edges))
    return EXIT_OK


def cmd_stats(a) -> int:
    s = stats(_read_coloring(a.coloring))
    _emit({"red_size": s.red_size, "blue_size": s.blue_size, "bicolored": s.bicolored, "excess": s.excess})
    return EXIT_OK


# -- parser -------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="balance-lab", description="Balanced copies in 2-list edge colorings of K_n.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def workers(sp):
        sp.add_argument("--workers", default=None, help="process count or 'auto' (default: $BALANCE_LAB_WORKERS or 1)")

    sp = sub.add_parser("named", help="print a named graph (c5, p4, k5, 4pan, lf:3+1+1, ...)")
    sp.add_argument("token")
    sp.set_defaults(func=cmd_named)

    sp = sub.add_parser("girth", help="girth of a named or graph6 graph")
    sp.add_argument("target")
    sp.set_defaults(func=cmd_girth)

    sp = sub.add_parser("half-family", help="subgraphs with half the edges, no isolates, up to isomorphism")
    sp.add_argument("target")
    sp.set_defaults(func=cmd_half_family)

    sp = sub.add_parser("ex", help="exact Turán number for small n")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--family", required=True, help="c3c4c5 | half:<target> | lf:<total>")
    workers(sp)
    sp.set_defaults(func=cmd_ex)

    sp = sub.add_parser("find-balanced", help="search a coloring for a balanced copy")
    sp.add_argument("--coloring", required=True, help="coloring JSON file, or - for stdin")
    sp.add_argument("--target", required=True)
    sp.add_argument("--no-bound", action="store_true", help="disable the vertex-cover exclusion test")
    sp.add_argument("--nondeterministic", action="store_true", help="return whichever worker finds a copy first")
    workers(sp)
    sp.set_defaults(func=cmd_find_balanced)

    for name, fn, what in (("bal-exact", cmd_bal_exact, "2-colorings"), ("lbal-exact", cmd_lbal_exact, "list colorings")):
        sp = sub.add_parser(name, help=f"exact balancing number over {what} for tiny n")
        sp.add_argument("--n", type=int, required=True)
        sp.add_argument("--target", required=True)
        workers(sp)
        sp.set_defaults(func=fn)

    sp = sub.add_parser("construct", help="emit a construction as coloring JSON")
    csub = sp.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    x = csub.add_parser("split")
    x.add_argument("--n", type=int, required=True)
    x.add_argument("--k", type=int, required=True)
    x = csub.add_parser("clique-split")
    x.add_argument("--n", type=int, required=True)
    x.add_argument("--a", type=int, required=True)
    x = csub.add_parser("typeb")
    x.add_argument("--n", type=int, required=True)
    x.add_argument("--t", type=int, required=True)
    x.add_argument("--rb", default="", help="bicolored edges as u,v;u,v")
    x = csub.add_parser("k5")
    x.add_argument("--n", type=int, required=True)
    x.add_argument("--eps", type=float, required=True)
    x.add_argument("--seed", type=int, default=0)
    x = csub.add_parser("single-edge")
    x.add_argument("--n", type=int, required=True)
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("engine", help="constructive balanced-cycle finders")
    esub = sp.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    for kind in ("odd", "c4k", "c4k2"):
        x = esub.add_parser(kind)
        x.add_argument("--coloring", required=True)
        x.add_argument("--k", type=int, required=True)
        if kind == "odd":
            x.add_argument("--alpha", type=int, choices=(-1, 1), required=True)
        workers(x)
    sp.set_defaults(func=cmd_engine)

    sp = sub.add_parser("formula", help="closed-form bounds, exact rationals printed as p/q")
    fsub = sp.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    x = fsub.add_parser("bal-odd")
    x.add_argument("--n", type=int, required=True)
    x.add_argument("--k", type=int, required=True)
    x.add_argument("--alpha", type=int, choices=(-1, 1), default=1)
    x = fsub.add_parser("c4k")
    x.add_argument("--n", type=int, required=True)
    x.add_argument("--k", type=int, required=True)
    x = fsub.add_parser("lf-ex")
    x.add_argument("--n", type=int, required=True)
    x.add_argument("--orders", required=True, help="component orders, comma separated")
    x = fsub.add_parser("k5")
    x.add_argument("--n", type=int, required=True)
    x.add_argument("--eps", type=float, required=True)
    x = fsub.add_parser("structural")
    x.add_argument("--n", type=int, required=True)
    x.add_argument("--ex", type=int, required=True)
    sp.set_defaults(func=cmd_formula)

    sp = sub.add_parser("verify", help="seeded randomized check of a claim")
    sp.add_argument("--claim", required=True, choices=oracle.CLAIMS)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--trials", type=int, default=1)
    sp.add_argument("--seed", type=int, default=None, help="root seed; a random one is drawn and reported if omitted")
    sp.add_argument("--k", type=int, default=1)
    sp.add_argument("--alpha", type=int, choices=(-1, 1), default=1)
    sp.add_argument("--eps", type=float, default=0.5)
    sp.add_argument("--excess", type=int, default=1)
    workers(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("export-dot", help="Graphviz rendering of a coloring, witness edges emphasized")
    sp.add_argument("--coloring", required=True)
    sp.add_argument("--witness", default=None, help="witness JSON (output of find-balanced or engine)")
    sp.add_argument("--target", default=None)
    sp.set_defaults(func=cmd_export_dot)

    sp = sub.add_parser("stats", help="class sizes and list-colour excess of a coloring")
    sp.add_argument("--coloring", required=True)
    sp.set_defaults(func=cmd_stats)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except engines.EngineError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_BUG
    except Exception as exc:  # noqa: BLE001
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_BUG


if __name__ == "__main__":
    sys.exit(main())
