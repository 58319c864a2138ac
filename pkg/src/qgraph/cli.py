"""Command-line front end: ``qgraph gen|run|bench|verify``."""
from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import gadgets
from .bench import ExperimentConfig, GENERATORS, MODELS, load_config, parse_sweep, run_sweep
from .errors import Disconnected, GraphFormatError, InvalidArgs, KindMismatch, QGraphError
from .graph import (
    complete_graph,
    cycle_graph,
    gen_connected_random,
    gen_random_regular,
    path_graph,
    read_edge_list,
    star_graph,
    write_edge_list,
)
from .ledger import QueryLedger, SimConfig
from .qmetrics import q_diameter, q_eccentricity, q_radius
from .runner import ALGORITHMS, report_json, run_algorithm

GEN_KINDS = ("er", "regular", "path", "cycle", "star", "complete",
             "sparse-gadget", "dense-gadget", "circle-gadget")

EXIT_OK, EXIT_FALSE, EXIT_ERROR = 0, 1, 2


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--mode", choices=("idealized", "stochastic"), default="idealized")
    p.add_argument("--delta", type=float, default=0.1)
    p.add_argument("--charge-const", type=float, default=1.0)
    p.add_argument("--sssp-polylog-exp", type=float, default=1.5)
    p.add_argument("--out", default=None, help="output path (default: stdout / graph.txt)")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    ap = argparse.ArgumentParser(prog="qgraph", description="Simulated quantum graph metrics.")
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", parents=[common], help="generate a graph or gadget file")
    g.add_argument("kind", choices=GEN_KINDS)
    g.add_argument("--n", type=int)
    g.add_argument("--m", type=int)
    g.add_argument("--degree", type=int, default=8)
    g.add_argument("--d", type=int)
    g.add_argument("--width", type=int)
    g.add_argument("--weights", default="unit", help="unit or uniform:lo:hi")

    r = sub.add_parser("run", parents=[common], help="run an algorithm on a graph file")
    r.add_argument("algorithm", choices=ALGORITHMS)
    r.add_argument("--graph", required=True)
    r.add_argument("--source", type=int, default=0)
    r.add_argument("--s", type=int, default=None)
    r.add_argument("--sample-const", type=float, default=2.0)

    b = sub.add_parser("bench", parents=[common], help="run a scaling sweep")
    b.add_argument("--config", help="JSON experiment config (overrides the flags below)")
    b.add_argument("--algorithm", choices=ALGORITHMS, default="diameter")
    b.add_argument("--generator", choices=GENERATORS, default="er")
    b.add_argument("--graph", default=None)
    b.add_argument("--sweep", default="128:512,256:1024", help="n:m[:s],... list")
    b.add_argument("--trials", type=int, default=1)
    b.add_argument("--weights", default="unit")
    b.add_argument("--model", choices=sorted(MODELS), default=None)
    b.add_argument("--tolerance", type=float, default=3.0)
    b.add_argument("--sample-const", type=float, default=2.0)
    b.add_argument("--csv", default=None)

    v = sub.add_parser("verify", parents=[common], help="check a gadget end to end")
    v.add_argument("gadget")
    v.add_argument("--sidecar", default=None)
    return ap


def sim_config(args) -> SimConfig:
    return SimConfig(fidelity=args.mode, delta=args.delta, charge_const=args.charge_const,
                     sssp_polylog_exp=args.sssp_polylog_exp, seed=args.seed)


def _need(args, *names):
    missing = [f"--{x}" for x in names if getattr(args, x) is None]
    if missing:
        raise InvalidArgs(f"{args.kind} needs {' '.join(missing)}")


def cmd_gen(args) -> int:
    out = args.out or "graph.txt"
    kind = args.kind
    if kind.endswith("gadget"):
        if kind == "dense-gadget":
            _need(args, "n")
            gd = gadgets.gen_dense_gadget(args.n, args.seed)
        elif kind == "sparse-gadget":
            _need(args, "d")
            gd = gadgets.gen_sparse_gadget(args.d, args.width or 3, args.seed)
        else:
            _need(args, "d")
            gd = gadgets.gen_radius_circle_gadget(args.d, args.width or 2, args.seed)
        gadgets.save_gadget(gd, out)
        g = gd.graph
    else:
        if kind == "er":
            _need(args, "n", "m")
            g = gen_connected_random(args.n, args.m, args.weights, args.seed)
        elif kind == "regular":
            _need(args, "n")
            g = gen_random_regular(args.n, args.degree, args.seed)
        elif kind == "star":
            _need(args, "n")
            g = star_graph(args.n - 1)
        else:
            _need(args, "n")
            g = {"path": path_graph, "cycle": cycle_graph, "complete": complete_graph}[kind](args.n)
        write_edge_list(g, out)
    print(g.n, g.m)
    return EXIT_OK


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def cmd_run(args) -> int:
    cfg = sim_config(args)
    g = read_edge_list(args.graph)
    res = run_algorithm(args.algorithm, g, cfg, source=args.source, s=args.s,
                        sample_const=args.sample_const)
    _emit(json.dumps(report_json(res, cfg), indent=2) + "\n", args.out)
    return EXIT_OK


def cmd_bench(args) -> int:
    if args.config:
        cfg = load_config(args.config)
    else:
        cfg = ExperimentConfig(
            algorithm=args.algorithm, sweep=parse_sweep(args.sweep), trials=args.trials,
            generator=args.generator, weights=args.weights, graph_file=args.graph,
            sim=sim_config(args), model=args.model, tolerance=args.tolerance,
            sample_const=args.sample_const, csv_path=args.csv, report_path=args.out)
    _, report = run_sweep(cfg)
    if not cfg.report_path:
        sys.stdout.write(json.dumps(report.to_dict(), indent=2) + "\n")
    return EXIT_OK if report.passed is not False else EXIT_FALSE


def verify_gadget(gd: gadgets.GadgetDescriptor, cfg: SimConfig) -> bool:
    """Run the metric matching the gadget kind and check the planted structure."""
    ledger = QueryLedger()
    if gd.kind == gadgets.SPARSE:
        report = q_eccentricity(gd.graph, gd.s_vertex, cfg, ledger)
    elif gd.kind == gadgets.DENSE:
        report = q_diameter(gd.graph, cfg, ledger)
    else:
        report = q_radius(gd.graph, cfg, ledger)
    return gadgets.verify_reduction(gd, report)


def cmd_verify(args) -> int:
    try:
        gd = gadgets.load_gadget(args.gadget, args.sidecar)
    except (OSError, json.JSONDecodeError, KeyError, GraphFormatError, KindMismatch) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    ok = verify_gadget(gd, sim_config(args))
    print("verified" if ok else "verification failed")
    return EXIT_OK if ok else EXIT_FALSE


COMMANDS = {"gen": cmd_gen, "run": cmd_run, "bench": cmd_bench, "verify": cmd_verify}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except Disconnected as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_ERROR
    except (QGraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
