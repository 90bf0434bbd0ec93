"""Command-line front end.

Exit codes: 0 computed, 1 negative decision, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import cuts, disjoint_paths, expansion, generators, oracle, reachability
from .strictify import strictify as semaphore_transform
from .core import (
    GraphFormatError,
    TemporalGraphError,
    format_cut,
    format_graph,
    parse_cut,
    parse_graph,
    require_vertices,
    sorted_cut,
    validate,
)

PARAMS = ("tp", "tpc", "tw", "tc", "p", "c")


class UsageError(Exception):
    pass


def load_graph(spec: str):
    """A graph file, or the name of a built-in example."""
    if spec in generators.EXAMPLE_NAMES and not os.path.exists(spec):
        return generators.named_example(spec)[0]
    try:
        with open(spec) as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read graph {spec!r}: {exc.strerror}") from None
    return parse_graph(text)


def load_cut(spec: str):
    """A cut file of 'v t' lines, or inline 'v:t,v:t'."""
    if os.path.exists(spec):
        with open(spec) as fh:
            return parse_cut(fh.read())
    items = []
    for part in filter(None, spec.split(",")):
        v, sep, t = part.rpartition(":")
        if not sep or not v:
            raise UsageError(f"bad cut element {part!r}; use v:t")
        try:
            items.append((v, int(t)))
        except ValueError:
            raise UsageError(f"bad timestep in {part!r}") from None
    return parse_cut("".join(f"{v} {t}\n" for v, t in items))


def cut_json(cut):
    return [[v, t] for v, t in sorted_cut(cut)]


class Output:
    def __init__(self, args):
        self.args = args
        self.lines: list[str] = []
        self.result: dict = {}
        self.witnesses: dict = {}

    def line(self, text: str = ""):
        self.lines.append(text)

    def emit(self, stream=None):
        stream = stream or sys.stdout
        if getattr(self.args, "json", False):
            params = {k: v for k, v in vars(self.args).items() if k not in ("func", "json")}
            envelope = {"command": self.args.command, "params": params, "result": self.result, "witnesses": self.witnesses}
            stream.write(json.dumps(envelope, sort_keys=True) + "\n")
        else:
            for text in self.lines:
                stream.write(text + "\n")


def _endpoints(args, graph):
    require_vertices(graph, args.source, args.target)
    return args.source, args.target


def cmd_reach(args, out):
    g = load_graph(args.graph)
    s, t = _endpoints(args, g)
    table = reachability.earliest_arrival(g, s, args.strict)
    walk = reachability.extract_walk(table, t)
    if walk is None:
        out.line("unreachable")
        out.result = {"reachable": False}
        return 1
    path = reachability.walk_to_path(walk)
    out.line(f"arrival={table[t]}")
    out.line(path.render())
    out.result = {"reachable": True, "arrival": table[t]}
    out.witnesses = {"path": path.render()}
    return 0


def cmd_walks(args, out):
    g = load_graph(args.graph)
    s, t = _endpoints(args, g)
    res = expansion.walks_menger(g, s, t, args.strict)
    out.line(f"tw=tc={res.value}")
    for w in res.walks:
        out.line("walk " + w.render())
    out.line("cut " + " ".join(f"{v}:{i}" for v, i in sorted_cut(res.cut)))
    out.result = {"tw": res.value, "tc": res.value}
    out.witnesses = {"walks": [w.render() for w in res.walks], "cut": cut_json(res.cut)}
    return 0


def cmd_verify_cut(args, out):
    g = load_graph(args.graph)
    s, t = _endpoints(args, g)
    cut = load_cut(args.cut)
    res = cuts.verify_cut(g, s, t, cut, args.strict)
    out.result = {"is_cut": res.is_cut}
    if res.is_cut:
        out.line("cut")
        return 0
    out.line("not a cut")
    out.line("witness " + res.witness.render())
    out.witnesses = {"path": res.witness.render()}
    return 1


def cmd_min_cut(args, out):
    g = load_graph(args.graph)
    s, t = _endpoints(args, g)
    res = cuts.find_min_cut(g, s, t, args.max, args.strict)
    if res.exceeded:
        out.line(f"h* > {args.max}")
        out.result = {"exceeds": args.max}
        return 1
    out.line(f"h*={res.size}")
    for v, i in sorted_cut(res.cut):
        out.line(f"{v} {i}")
    out.result = {"size": res.size}
    out.witnesses = {"cut": cut_json(res.cut)}
    return 0


def cmd_two_paths(args, out):
    g = load_graph(args.graph)
    s, t = _endpoints(args, g)
    res = disjoint_paths.find_two_paths(g, s, t, args.strict)
    if args.trace and res.trace is not None:
        for e in res.trace.removed:
            out.line(f"removed {e.tail} {e.head} {e.time}")
        out.witnesses["removed"] = [list(e) for e in res.trace.removed]
    if not res.found:
        out.line("tp <= 1")
        out.result = {"tp_at_least_2": False}
        return 1
    p, q = res.paths
    out.line(p.render())
    out.line(q.render())
    out.result = {"tp_at_least_2": True}
    out.witnesses["paths"] = [p.render(), q.render()]
    return 0


def cmd_strictify(args, out):
    g = load_graph(args.graph)
    s, t = _endpoints(args, g)
    image, mapping = semaphore_transform(g, s, t)
    text = format_graph(image)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    if args.map:
        with open(args.map, "w") as fh:
            fh.write(mapping.format_table())
    out.result = {"vertices": image.n, "temporal_edges": image.num_temporal_edges, "lifetime": mapping.lifetime}
    out.line(f"vertices={image.n} temporal_edges={image.num_temporal_edges} lifetime={mapping.lifetime}")
    if not args.out:
        out.lines += text.rstrip("\n").split("\n")
    return 0


def cmd_oracle(args, out):
    g = load_graph(args.graph)
    s, t = _endpoints(args, g)
    wanted = [args.param] if args.param else list(PARAMS)
    catalog = oracle.enumerate_paths(g, s, t, args.strict)
    if catalog.exceeded:
        raise oracle.CapExceeded("path enumeration cap reached")
    values = {}
    for name in wanted:
        if name == "tp":
            values[name] = oracle.tp_exact(catalog)
        elif name == "tpc":
            values[name] = oracle.tpc_exact(catalog)
        elif name == "p":
            values[name] = oracle.p_exact(catalog)
        elif name == "c":
            values[name] = oracle.c_exact(catalog)
        elif name == "tw":
            values[name] = oracle.tw_exact(g, s, t, args.strict)
        else:
            values[name] = oracle.tc_exact(g, s, t, args.strict)
    for name in wanted:
        out.line(f"{name}={values[name]}")
    out.result = values
    out.witnesses = {"paths": len(catalog)}
    return 0


def cmd_gen(args, out):
    kind = args.kind
    extra = {}
    if kind in generators.EXAMPLE_NAMES:
        g, s, t = generators.named_example(kind)
    elif kind == "kcopies":
        g, s, t = generators.k_copies(args.k, args.base)
    elif kind == "random":
        if args.seed is None:
            raise UsageError("gen --kind random requires --seed")
        g = generators.random_graph(args.n, args.density, args.tau, args.directed, args.seed)
    elif kind == "sat":
        if args.cnf:
            with open(args.cnf) as fh:
                phi = generators.parse_dimacs(fh.read())
        else:
            phi = generators.SAT_EXAMPLE if args.formula == "sat" else generators.UNSAT_EXAMPLE
        red = generators.sat_reduction(phi, args.strict_split)
        g = red.graph
        extra = {"k": red.k, "N": red.n_breaking, "cut": cut_json(red.cut)}
        if args.cut_out:
            with open(args.cut_out, "w") as fh:
                fh.write(format_cut(red.cut))
    elif kind == "linkage":
        if args.seed is None:
            raise UsageError("gen --kind linkage requires --seed")
        inst = generators.random_linkage(args.n, args.density, args.seed)
        red = generators.linkage_reduction(inst, args.k if args.k >= 3 else 3)
        g = red.graph
        extra = {"k": red.k, "linked": inst.is_linked()}
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(f"unknown kind {kind}")
    text = format_graph(g)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        out.lines += text.rstrip("\n").split("\n")
    for key, value in extra.items():
        if key != "cut":
            out.line(f"# {key}={value}")
    out.result = {"vertices": g.n, "temporal_edges": g.num_temporal_edges, **extra}
    return 0


def cmd_validate(args, out):
    try:
        with open(args.graph) as fh:
            text = fh.read()
    except OSError:
        if args.graph in generators.EXAMPLE_NAMES:
            text = format_graph(generators.named_example(args.graph)[0])
        else:
            raise UsageError(f"cannot read graph {args.graph!r}") from None
    g = parse_graph(text)
    problems = validate(g)
    out.result = {"valid": not problems}
    out.line("ok")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="temporal-disjoint", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name, func, help, endpoints=True, model=True):
        p = sub.add_parser(name, help=help)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        if endpoints:
            p.add_argument("--graph", required=True, help="graph file or example name")
            p.add_argument("--from", dest="source", required=True)
            p.add_argument("--to", dest="target", required=True)
        if model:
            p.add_argument("--strict", action="store_true", help="strictly increasing times")
        p.set_defaults(func=func)
        return p

    command("reach", cmd_reach, "earliest arrival and a witness path")
    command("walks", cmd_walks, "disjoint walks and a walk cut via max flow")
    p = command("verify-cut", cmd_verify_cut, "is a temporal-vertex set a path-cut?")
    p.add_argument("--cut", required=True, help="cut file ('v t' lines) or v:t,v:t")
    p = command("min-cut", cmd_min_cut, "smallest path-cut up to a size bound")
    p.add_argument("--max", type=int, required=True)
    p = command("two-paths", cmd_two_paths, "two t-vertex disjoint paths")
    p.add_argument("--trace", action="store_true", help="list the temporal edges removed")
    p = command("strictify", cmd_strictify, "strict -> non-strict transform", model=False)
    p.add_argument("--out", help="image graph file (default: stdout)")
    p.add_argument("--map", help="gadget table file")
    p = command("oracle", cmd_oracle, "brute-force parameters (small graphs only)")
    p.add_argument("--param", choices=PARAMS)
    p = command("gen", cmd_gen, "generate an instance", endpoints=False, model=False)
    p.add_argument(
        "--kind",
        required=True,
        choices=[*generators.EXAMPLE_NAMES, "kcopies", "sat", "linkage", "random"],
    )
    p.add_argument("--out")
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--base", default="fig2", choices=["fig2", "fig4strict", "fig4paths"])
    p.add_argument("--n", type=int, default=6)
    p.add_argument("--density", type=float, default=0.3)
    p.add_argument("--tau", type=int, default=4)
    p.add_argument("--directed", action="store_true")
    p.add_argument("--seed", type=int)
    p.add_argument("--cnf", help="formula file with a 'p cnf' header")
    p.add_argument("--formula", choices=["sat", "unsat"], default="sat", help="built-in formula when --cnf is absent")
    p.add_argument("--strict-split", action="store_true")
    p.add_argument("--cut-out", help="write the reduction's test set here")
    p = command("validate", cmd_validate, "check a graph file", endpoints=False, model=False)
    p.add_argument("--graph", required=True)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    out = Output(args)
    try:
        code = args.func(args, out)
    except (UsageError, GraphFormatError, TemporalGraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    out.emit()
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
