"""Command-line front end.

    arbotri exact    --input G.txt
    arbotri gen      --spec planted:n=2000,alpha=4,t=20000 --seed 1 --output G.txt
    arbotri estimate --input G.txt --eps 0.25 --delta 0.1 --seed 7 [--t-tilde T]
    arbotri gadget   --M 6000 --alpha-star 20 --k 600 --gamma 0.25 --dist D1 --seed 3
    arbotri bench    --family cliques:n=4000,q=8,m=12000 --sweep count=25,50,100,200 --seeds 0,1

Exit codes: 0 ok, 2 usage error, 3 input error, 4 infeasible parameters.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
import time
from pathlib import Path

import numpy as np

from .estimator import CHARGING_MODES, EstimatorConfig, estimate
from .gadget import GadgetSpec, PtpInstance, build_explicit_gadget, ptp_distinguish, sample_ptp
from .generators import InfeasibleSpec, gen_graph, parse_spec
from .graph import EdgeListError, Graph, count_triangles_exact, degeneracy, dump_edge_list, load_edge_list, triangles_per_edge
from .queries import GraphBackend
from .rng import make_stream
from .search import estimate_with_confidence

SCHEMA = 1

BENCH_HEADER = [
    "n", "m", "T", "alpha", "eps", "seed", "queries_total", "queries_degree", "queries_neighbour",
    "queries_edge", "queries_random_edge", "estimate", "rel_err", "ms",
]

EXIT_USAGE, EXIT_INPUT, EXIT_INFEASIBLE = 2, 3, 4


class InputError(Exception):
    pass


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def _load_graph(args) -> Graph:
    if args.input and args.gen:
        raise argparse.ArgumentTypeError("give exactly one of --input / --gen")
    if args.input:
        try:
            text = Path(args.input).read_text()
        except OSError as exc:
            raise InputError(str(exc)) from exc
        try:
            return load_edge_list(text)
        except EdgeListError as exc:
            raise InputError(str(exc)) from exc
    if args.gen:
        return gen_graph(args.gen, args.seed)
    raise argparse.ArgumentTypeError("give exactly one of --input / --gen")


def _config(args) -> EstimatorConfig:
    return EstimatorConfig(
        eps=args.eps, c=args.c, l=args.l, h=args.h, oracle_delta=args.oracle_delta,
        sample_scale=args.sample_scale, seed=args.seed, charging=args.charging,
        median_constant=args.median_constant,
    )


def _alpha(args, g: Graph) -> float:
    if args.alpha is not None:
        return args.alpha
    kappa = degeneracy(g).kappa
    print(f"warning: --alpha not given, using degeneracy {kappa}; guarantees hold w.r.t. it",
          file=sys.stderr)
    return max(kappa, 1)


def cmd_exact(args) -> dict:
    g = _load_graph(args)
    te = triangles_per_edge(g)
    dg = degeneracy(g)
    vals = list(te.values())
    return {
        "schema": SCHEMA, "n": g.n, "m": g.m, "T": sum(vals) // 3,
        "kappa": dg.kappa, "density_bound": dg.density_bound,
        "per_edge": {
            "max": max(vals, default=0),
            "mean": (sum(vals) / len(vals)) if vals else 0.0,
            "edges_in_triangles": sum(1 for v in vals if v > 0),
        },
    }


def cmd_gen(args) -> str:
    return dump_edge_list(gen_graph(args.spec, args.seed))


def cmd_estimate(args) -> dict:
    g = _load_graph(args)
    alpha = _alpha(args, g)
    cfg = _config(args)
    b = GraphBackend(g)
    out = {"schema": SCHEMA, "n": g.n, "m": g.m, "alpha": alpha, "eps": args.eps, "seed": args.seed,
           "config": cfg.to_json()}
    if args.t_tilde is not None:
        rep = estimate(b, args.t_tilde, alpha, cfg, make_stream(args.seed), record=args.verbose)
        out.update({"mode": "fixed_t_tilde", "estimate": rep.t_hat, "report": rep.to_json(args.verbose)})
    else:
        res = estimate_with_confidence(b, alpha, args.eps, args.delta, cfg, make_stream(args.seed))
        out.update({"mode": "search", "delta": args.delta, "estimate": res.estimate,
                    "result": res.to_json(args.verbose)})
    out["counters"] = b.counter.to_json()
    if args.with_exact:
        T = count_triangles_exact(g)
        out["exact_T"] = T
        out["rel_err"] = (out["estimate"] - T) / T if T else (0.0 if out["estimate"] == 0 else math.inf)
    return out


def cmd_gadget(args) -> dict:
    spec = GadgetSpec(args.M, args.alpha_star)
    if args.force is not None:
        x = np.full(args.M, 1 if args.force == "ones" else 0, dtype=np.uint8)
        inst = PtpInstance(args.M, args.k, args.gamma, x, "external")
    else:
        inst = sample_ptp(args.M, args.k, args.gamma, args.dist, make_stream(args.seed))
    out = {"schema": SCHEMA, "spec": spec.to_json(), "k": args.k, "gamma": args.gamma, "source": inst.source,
           "seed": args.seed, "popcount": inst.popcount, "T": inst.popcount * spec.alpha_star}
    if args.instance:
        Path(args.instance).write_text(inst.to_text())
        out["instance_file"] = args.instance
    if args.explicit:
        Path(args.explicit).write_text(dump_edge_list(build_explicit_gadget(inst.x, spec.alpha_star)))
        out["explicit_file"] = args.explicit
    if args.distinguish:
        cfg = _config(args)
        v = ptp_distinguish(inst.x, spec, args.k, args.gamma, cfg, make_stream(args.seed).child(),
                            delta=args.delta)
        out["distinguish"] = {"label": v.label, "estimate": v.estimate, "threshold": v.threshold,
                              "counters": v.counters.to_json()}
    return out


def _sweep_specs(family: str, sweep: str | None) -> list[str]:
    if not sweep:
        return [family]
    key, _, values = sweep.partition("=")
    name, params = parse_spec(family)
    out = []
    for val in values.split(","):
        p = dict(params, **{key.strip(): val.strip()})
        out.append(name + ":" + ",".join(f"{k}={v}" for k, v in p.items()))
    return out


def bench_rows(specs: list[str], seeds: list[int], args) -> list[list]:
    rows = []
    for spec in specs:
        g = gen_graph(spec, args.graph_seed)
        T = count_triangles_exact(g)
        alpha = args.alpha if args.alpha is not None else max(degeneracy(g).kappa, 1)
        for seed in seeds:
            cfg = EstimatorConfig(eps=args.eps, c=args.c, l=args.l, h=args.h, oracle_delta=args.oracle_delta,
                                  sample_scale=args.sample_scale, seed=seed, charging=args.charging,
                                  median_constant=args.median_constant)
            b = GraphBackend(g)
            t0 = time.perf_counter()
            if args.t_tilde_exact:
                est = estimate(b, max(T, 1), alpha, cfg, make_stream(seed)).t_hat
            else:
                est = estimate_with_confidence(b, alpha, args.eps, args.delta, cfg, make_stream(seed)).estimate
            ms = (time.perf_counter() - t0) * 1000.0
            c = b.counter
            rel = (est - T) / T if T else 0.0
            rows.append([g.n, g.m, T, alpha, args.eps, seed, c.total, c.degree, c.neighbour, c.edge,
                         c.random_edge, repr(float(est)), repr(float(rel)),
                         f"{ms:.1f}" if args.timing else ""])
    return rows


def cmd_bench(args) -> str:
    seeds = [int(s) for s in args.seeds.split(",")] if args.seeds else [args.seed]
    rows = bench_rows(_sweep_specs(args.family, args.sweep), seeds, args)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(BENCH_HEADER)
    w.writerows(rows)
    return buf.getvalue()


def _add_graph_source(p):
    p.add_argument("--input", help="edge-list file")
    p.add_argument("--gen", help="generator spec, e.g. planted:n=2000,alpha=4,t=20000")


def _add_estimator_flags(p):
    p.add_argument("--alpha", type=float, help="arboricity upper bound (default: degeneracy)")
    p.add_argument("--eps", type=float, default=0.25)
    p.add_argument("--delta", type=float, default=1.0 / 6.0)
    p.add_argument("--c", type=float, default=1.0)
    p.add_argument("--l", type=float, default=6.0)
    p.add_argument("--h", type=float, default=24.0)
    p.add_argument("--oracle-delta", type=float, default=None)
    p.add_argument("--sample-scale", type=float, default=1.0)
    p.add_argument("--median-constant", type=float, default=18.0)
    p.add_argument("--charging", choices=CHARGING_MODES, default="canonical")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="arbotri", description="Arboricity-parameterized triangle estimation")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("exact", help="exact counts and degeneracy")
    _add_graph_source(p)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--output")

    p = sub.add_parser("gen", help="write a generated graph as an edge list")
    p.add_argument("--spec", required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--output")

    p = sub.add_parser("estimate", help="query-based triangle estimate")
    _add_graph_source(p)
    _add_estimator_flags(p)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--t-tilde", type=float, default=None, help="skip the search and use this guess")
    p.add_argument("--with-exact", action="store_true")
    p.add_argument("--verbose", action="store_true")
    p.add_argument("--output")

    p = sub.add_parser("gadget", help="sample a PTP instance and its gadget graph")
    p.add_argument("--M", type=int, required=True)
    p.add_argument("--alpha-star", type=int, required=True)
    p.add_argument("--k", type=float, required=True)
    p.add_argument("--gamma", type=float, required=True)
    p.add_argument("--dist", choices=["D0", "D1"], default="D0")
    p.add_argument("--force", choices=["zeros", "ones"], default=None, help="use a constant string")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--instance", help="write the instance file here")
    p.add_argument("--explicit", help="write the explicit gadget edge list here")
    p.add_argument("--distinguish", action="store_true")
    _add_estimator_flags(p)
    p.add_argument("--output")

    p = sub.add_parser("bench", help="CSV of query counts over a graph family")
    p.add_argument("--family", required=True, help="generator spec")
    p.add_argument("--sweep", help="param=v1,v2,... varied across instances")
    p.add_argument("--graph-seed", type=int, default=0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--seeds", help="comma-separated estimator seeds (overrides --seed)")
    p.add_argument("--t-tilde-exact", action="store_true", help="bypass the search with t_tilde = T")
    p.add_argument("--timing", action="store_true", help="fill the ms column (breaks byte-reproducibility)")
    _add_estimator_flags(p)
    p.add_argument("--output")
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "exact":
            _emit(_dumps(cmd_exact(args)), args.output)
        elif args.command == "gen":
            _emit(cmd_gen(args), args.output)
        elif args.command == "estimate":
            _emit(_dumps(cmd_estimate(args)), args.output)
        elif args.command == "gadget":
            _emit(_dumps(cmd_gadget(args)), args.output)
        elif args.command == "bench":
            _emit(cmd_bench(args), args.output)
    except argparse.ArgumentTypeError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (InfeasibleSpec, ValueError) as exc:
        print(f"infeasible parameters: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    return 0


if __name__ == "__main__":
    sys.exit(main())
