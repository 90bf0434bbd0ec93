"""Instance factories: worked examples, k-copies, random graphs, hardness reductions."""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .core import GraphFormatError, TemporalGraph, TemporalGraphError, TemporalVertex, iter_lines

_EXAMPLES = {
    "fig1": [("s", "u", (1, 2)), ("u", "x", (1,)), ("x", "y", (2,)), ("y", "u", (3,)), ("u", "t", (2, 3))],
    "fig2": [
        ("s", "x", (1, 2)),
        ("s", "y", (1,)),
        ("x", "t", (2, 3)),
        ("y", "t", (2, 3)),
        ("x", "u", (1, 2, 3)),
        ("u", "y", (1, 2)),
    ],
    "fig3kkk": [
        ("s", "u", (5,)),
        ("s", "x", (1,)),
        ("x", "u", (2,)),
        ("x", "y", (4,)),
        ("y", "u", (6,)),
        ("y", "t", (7,)),
        ("u", "t", (3,)),
    ],
    "fig4strict": [
        ("s", "x", (1, 3)),
        ("s", "y", (1,)),
        ("x", "t", (4, 6)),
        ("y", "t", (6,)),
        ("x", "u", (3, 4)),
        ("u", "y", (3, 5)),
    ],
    # same instance, labels rebuilt from its intended strict path list
    "fig4paths": [
        ("s", "x", (1,)),
        ("x", "u", (2,)),
        ("u", "t", (3,)),
        ("s", "u", (3,)),
        ("u", "y", (4,)),
        ("y", "t", (5,)),
        ("x", "y", (3,)),
    ],
}

EXAMPLE_NAMES = tuple(_EXAMPLES)


def named_example(name: str) -> tuple[TemporalGraph, str, str]:
    try:
        edges = _EXAMPLES[name]
    except KeyError:
        raise TemporalGraphError(f"unknown example {name!r}; choose from {', '.join(EXAMPLE_NAMES)}") from None
    return TemporalGraph(edges), "s", "t"


def k_copies(k: int, base: TemporalGraph | str = "fig2", s: str = "s", t: str = "t") -> tuple[TemporalGraph, str, str]:
    """k disjoint copies of ``base`` glued at s and at t; copy i renames v to v_i."""
    if k < 1:
        raise ValueError("k must be at least 1")
    if isinstance(base, str):
        base, s, t = named_example(base)

    def name(v, i):
        return v if v in (s, t) else f"{v}_{i}"

    edges = []
    vertices = []
    for i in range(1, k + 1):
        vertices += [name(v, i) for v in base.vertices]
        for u, v, ts in base.edge_list():
            edges.append((name(u, i), name(v, i), ts))
    return TemporalGraph(edges, vertices=vertices, directed=base.directed), s, t


def random_graph(n: int, density: float, tau: int, directed: bool = False, seed: int = 0, names=None) -> TemporalGraph:
    """Each (ordered if directed) pair is active at each timestep with probability ``density``."""
    if n < 2 or tau < 1:
        raise ValueError("need n >= 2 and tau >= 1")
    rng = random.Random(seed)
    names = list(names) if names is not None else [f"v{i}" for i in range(n)]
    pairs = itertools.permutations(names, 2) if directed else itertools.combinations(names, 2)
    edges = []
    for u, v in pairs:
        ts = [i for i in range(1, tau + 1) if rng.random() < density]
        if ts:
            edges.append((u, v, ts))
    return TemporalGraph(edges, vertices=names, directed=directed)


def random_instance(n: int, density: float, tau: int, directed: bool, seed: int, non_adjacent: bool = True):
    """A random graph on s, t, a, b, ... with s and t made non-adjacent if asked."""
    inner = [chr(ord("a") + i) for i in range(n - 2)] if n <= 28 else [f"v{i}" for i in range(1, n - 1)]
    g = random_graph(n, density, tau, directed, seed, names=["s", "t"] + inner)
    if non_adjacent and g.adjacent("s", "t"):
        g = TemporalGraph(
            [(u, v, ts) for u, v, ts in g.edge_list() if {u, v} != {"s", "t"}], vertices=g.vertices, directed=directed
        )
    return g, "s", "t"


# ---------------------------------------------------------------------------
# (2,2,3)-SAT


@dataclass
class SatInstance:
    num_vars: int
    clauses: list[list[int]]

    def restriction_problems(self) -> list[str]:
        out = []
        for i, c in enumerate(self.clauses, 1):
            if not 1 <= len(c) <= 3:
                out.append(f"clause {i} has {len(c)} literals")
            if len({abs(x) for x in c}) != len(c):
                out.append(f"clause {i} repeats a variable")
        for j in range(1, self.num_vars + 1):
            pos = sum(c.count(j) for c in self.clauses)
            neg = sum(c.count(-j) for c in self.clauses)
            if (pos, neg) != (2, 2):
                out.append(f"variable {j} occurs {pos} times positively and {neg} negatively")
        return out

    @property
    def restricted(self) -> bool:
        return not self.restriction_problems()

    def satisfied_by(self, assignment) -> bool:
        return all(any(assignment[abs(x) - 1] == (x > 0) for x in c) for c in self.clauses)

    def satisfying_assignment(self):
        """Truth-table search; fine for the handful of variables used here."""
        for bits in itertools.product((True, False), repeat=self.num_vars):
            if self.satisfied_by(bits):
                return bits
        return None


def parse_dimacs(text: str) -> SatInstance:
    header = None
    clauses: list[list[int]] = []
    current: list[int] = []
    for lineno, toks in iter_lines(text):
        if toks[0] in ("c", "%"):
            continue
        if toks[0] == "p":
            if len(toks) != 4 or toks[1] != "cnf":
                raise GraphFormatError(f"line {lineno}: bad header")
            header = (int(toks[2]), int(toks[3]))
            continue
        if header is None:
            raise GraphFormatError(f"line {lineno}: clause before header")
        for tok in toks:
            x = int(tok)
            if x == 0:
                clauses.append(current)
                current = []
            else:
                current.append(x)
    if header is None:
        raise GraphFormatError("missing 'p cnf' header")
    if current:
        clauses.append(current)
    if len(clauses) != header[1]:
        raise GraphFormatError(f"header says {header[1]} clauses, found {len(clauses)}")
    return SatInstance(header[0], clauses)


@dataclass
class SatReduction:
    graph: TemporalGraph
    s: str
    t: str
    k: int
    n_breaking: int
    cut: frozenset[TemporalVertex]
    snapshots: list[str] = field(default_factory=list)


def sat_reduction(phi: SatInstance, strict_split: bool = False) -> SatReduction:
    """Clause, breaking and linking snapshots in sequence.

    phi is satisfiable iff the graph has ``k = n_breaking + 1`` disjoint
    s,t-paths, iff ``cut`` (the breaking-snapshot copies of each S_i) is
    not a path-cut.
    """
    problems = phi.restriction_problems()
    if problems:
        raise TemporalGraphError("not a (2,2,3) formula: " + "; ".join(problems))
    m = len(phi.clauses)
    seen: dict[int, int] = {}
    routes = []  # per clause: list of f,l-paths as vertex lists
    for i, clause in enumerate(phi.clauses, 1):
        rs = []
        for lit in clause:
            seen[lit] = seen.get(lit, 0) + 1
            h, j = seen[lit], abs(lit)
            if lit > 0:
                mid = [f"x{j}_1_{h}", f"x{j}_2_{h}"]
            else:
                mid = [f"x{j}_{h}_1", f"x{j}_{h}_2"]
            rs.append([f"f{i}", *mid, f"l{i}"])
        routes.append(rs)

    labels: dict[tuple[str, str], list[int]] = {}

    def add(u, v, time):
        key = (u, v) if u < v else (v, u)
        labels.setdefault(key, []).append(time)

    time = 0
    snapshots = []
    cut = set()
    n_breaking = 0
    if strict_split:
        # s-f1 and lm-t get snapshots of their own so a strict path can chain them
        time = 1
        add("s", "f1", 1)
        snapshots.append("S")
    for i in range(1, m + 1):
        segs = ["G"] if not strict_split else ["G1", "G2", "G3"]
        base = time + 1
        for r in routes[i - 1]:
            for a, b in zip(r, r[1:]):
                if not strict_split:
                    add(a, b, base)
                elif a == f"f{i}":
                    add(a, b, base)
                elif b == f"l{i}":
                    add(a, b, base + 2)
                else:
                    add(a, b, base + 1)
        if i == 1 and not strict_split:
            add("s", "f1", base)
        snapshots += [f"{g}{i}" for g in segs]
        time += len(segs)
        if i == m:
            if strict_split:
                time += 1
                snapshots.append("T")
            add(f"l{m}", "t", time)
            break
        s_i = [f"f{i}"] + [v for r in routes[i - 1] for v in r[1:-1]]
        if not strict_split:
            time += 1
            for u in s_i:
                add("s", u, time)
                add(u, "t", time)
                cut.add(TemporalVertex(u, time))
            snapshots.append(f"B{i}")
        else:
            for u in s_i:
                add("s", u, time + 1)
                add(u, "t", time + 2)
                cut.add(TemporalVertex(u, time + 2))
            time += 2
            snapshots += [f"B1{i}", f"B2{i}"]
        n_breaking += len(s_i)
        time += 1
        add(f"l{i}", f"f{i + 1}", time)
        snapshots.append(f"L{i}")
    graph = TemporalGraph((u, v, sorted(ts)) for (u, v), ts in labels.items())
    return SatReduction(graph, "s", "t", n_breaking + 1, n_breaking, frozenset(cut), snapshots)


# small certified formulas for tests and the CLI
SAT_EXAMPLE = SatInstance(2, [[1, 2], [1, 2], [-1, -2], [-1, -2]])
UNSAT_EXAMPLE = SatInstance(2, [[1, 2], [1, -2], [-1, 2], [-1, -2]])


# ---------------------------------------------------------------------------
# 2-Linkage


@dataclass
class LinkageInstance:
    arcs: list[tuple[str, str]]
    x1: str = "x1"
    y1: str = "y1"
    x2: str = "x2"
    y2: str = "y2"
    vertices: list[str] = field(default_factory=list)

    @property
    def terminals(self) -> tuple[str, str, str, str]:
        return (self.x1, self.y1, self.x2, self.y2)

    def problems(self) -> list[str]:
        out = []
        arcs = set(self.arcs)
        ts = self.terminals
        if len(set(ts)) != 4:
            out.append("terminals must be distinct")
        for a, b in arcs:
            if a == b:
                out.append(f"self-loop at {a}")
            if b in (self.x1, self.x2):
                out.append(f"arc {a}->{b} enters a source terminal")
            if a in (self.y1, self.y2):
                out.append(f"arc {a}->{b} leaves a sink terminal")
            if a in ts and b in ts:
                out.append(f"terminals {a} and {b} are adjacent")
        return out

    def all_vertices(self) -> list[str]:
        vs = set(self.vertices) | set(self.terminals)
        for a, b in self.arcs:
            vs |= {a, b}
        return sorted(vs)

    def is_linked(self) -> bool:
        """Brute force: some x1,y1-path and some x2,y2-path sharing no vertex."""
        succ: dict[str, list[str]] = {v: [] for v in self.all_vertices()}
        for a, b in self.arcs:
            succ[a].append(b)

        def paths(src, dst):
            stack = [(src, (src,))]
            while stack:
                v, p = stack.pop()
                if v == dst:
                    yield frozenset(p)
                    continue
                for w in succ[v]:
                    if w not in p:
                        stack.append((w, p + (w,)))

        second = list(paths(self.x2, self.y2))
        return any(p.isdisjoint(q) for p in paths(self.x1, self.y1) for q in second)


@dataclass
class LinkageReduction:
    graph: TemporalGraph
    s: str
    t: str
    k: int


def linkage_reduction(inst: LinkageInstance, k: int = 3) -> LinkageReduction:
    """Directed, lifetime 3: linked iff k disjoint s,t-paths exist."""
    if k < 3:
        raise ValueError("k must be at least 3")
    problems = inst.problems()
    if problems:
        raise TemporalGraphError("bad linkage instance: " + "; ".join(problems))
    x1, y1, x2, y2 = inst.terminals
    inner = [v for v in inst.all_vertices() if v not in inst.terminals]
    taken = set(inner)
    for name in ("s", "t", "w12", "w21"):
        if name in taken:
            raise TemporalGraphError(f"vertex name {name!r} is reserved")
    labels: dict[tuple[str, str], set[int]] = {}

    def add(u, v, *times):
        labels.setdefault((u, v), set()).update(times)

    add("s", "w12", 1, 2)
    add("s", "w21", 1)
    add("w12", "w21", 2)
    add("w12", "t", 3)
    add("w21", "t", 2, 3)
    for a, b in inst.arcs:
        if a not in inst.terminals and b not in inst.terminals:
            add(a, b, 1)
        if a == x1:
            add("w12", b, 1)
        if a == x2:
            add("w21", b, 1)
        if b == y1:
            add(a, "w21", 3)
        if b == y2:
            add(a, "w12", 3)
    pendants = [f"p{i}" for i in range(1, k - 2)]
    for p in pendants:
        if p in taken:
            raise TemporalGraphError(f"vertex name {p!r} is reserved")
        add("s", p, 2)
        add(p, "t", 2)
    graph = TemporalGraph(
        ((u, v, sorted(ts)) for (u, v), ts in labels.items()),
        vertices=["s", "t", "w12", "w21", *inner],
        directed=True,
    )
    return LinkageReduction(graph, "s", "t", k)


def random_linkage(n_inner: int, p: float, seed: int) -> LinkageInstance:
    """Random digraph on terminals plus ``n_inner`` vertices obeying the instance rules."""
    rng = random.Random(seed)
    inner = [f"v{i}" for i in range(n_inner)]
    inst = LinkageInstance([], vertices=inner)
    x1, y1, x2, y2 = inst.terminals
    arcs = []
    for a in [x1, x2, *inner]:
        for b in [y1, y2, *inner]:
            if a == b or (a in inst.terminals and b in inst.terminals):
                continue
            if rng.random() < p:
                arcs.append((a, b))
    inst.arcs = arcs
    return inst
