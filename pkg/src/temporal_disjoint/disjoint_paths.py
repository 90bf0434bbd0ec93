"""Two t-vertex disjoint temporal s,t-paths: minimal reduction, then greedy extraction."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .core import (
    TemporalEdge,
    TemporalGraph,
    TemporalGraphError,
    TemporalPath,
    are_t_vertex_disjoint,
    require_non_adjacent,
)
from .cuts import has_two_disjoint_paths
from .expansion import walks_menger
from .reachability import walk_to_path
from .strictify import map_path_back, strictify


@dataclass
class MinimalReductionTrace:
    removed: list[TemporalEdge] = field(default_factory=list)
    graph: TemporalGraph | None = None
    checks: int = 0


def _certificate(graph: TemporalGraph, s: str, t: str):
    """Try to turn max-flow walks into a disjoint pair of paths (may fail)."""
    flow = walks_menger(graph, s, t)
    paths = [walk_to_path(w) for w in flow.walks]
    for p, q in itertools.combinations(paths, 2):
        if are_t_vertex_disjoint(p, q):
            return p, q
    return None


def reduce_to_minimal(graph: TemporalGraph, s: str, t: str) -> MinimalReductionTrace | None:
    """Delete temporal edges in (time, tail, head) order while tp >= 2 survives.

    Returns None when tp <= 1 from the start.  While a disjoint pair is
    known, edges outside it are deleted without a test (the pair still
    certifies tp >= 2); only edges on the pair are tested.
    """
    require_non_adjacent(graph, s, t)
    trace = MinimalReductionTrace()
    trace.checks += 1
    if not has_two_disjoint_paths(graph, s, t):
        return None
    current = graph
    cert = _certificate(current, s, t)
    for e in graph.temporal_edges:
        if cert is not None and not _on_pair(e, cert, current.directed):
            current = current.without([e])
            trace.removed.append(e)
            continue
        candidate = current.without([e])
        trace.checks += 1
        if has_two_disjoint_paths(candidate, s, t):
            current = candidate
            trace.removed.append(e)
            cert = _certificate(current, s, t)
    trace.graph = current
    return trace


def _on_pair(e: TemporalEdge, pair, directed: bool) -> bool:
    for p in pair:
        for f in p.edges:
            if f.time == e.time and (
                (f.tail, f.head) == (e.tail, e.head) or (not directed and (f.head, f.tail) == (e.tail, e.head))
            ):
                return True
    return False


def degree_problems(graph: TemporalGraph, s: str, t: str) -> list[str]:
    """Degree facts every s,t-minimal graph satisfies."""
    out = []
    for v in graph.vertices:
        if v in (s, t):
            if graph.temporal_degree(v) != 2:
                out.append(f"d({v}) = {graph.temporal_degree(v)}, expected 2")
            continue
        d = graph.temporal_degree(v)
        if d not in (0, 2, 4):
            out.append(f"d({v}) = {d}, expected 0, 2 or 4")
        if graph.directed:
            din, dout = graph.in_out_degree(v)
            if din != dout:
                out.append(f"{v} has in-degree {din} and out-degree {dout}")
    if graph.directed:
        if graph.in_out_degree(s)[0] or graph.in_out_degree(t)[1]:
            out.append("arc into s or out of t")
    return out


def _greedy_path(edges: set[TemporalEdge], graph: TemporalGraph, s: str, t: str) -> TemporalPath:
    def leaving(v, after):
        out = []
        for e in edges:
            if e.time < after:
                continue
            if e.tail == v:
                out.append(e)
            elif not graph.directed and e.head == v:
                out.append(TemporalEdge(v, e.tail, e.time))
        return out

    def key(e):
        return (e.time, e.head)

    start = leaving(s, 0)
    if not start:
        raise TemporalGraphError("no temporal edge leaves s")
    step = min(start, key=lambda e: (e.head, e.time))
    vertices, times = [s], []
    while True:
        edges.discard(step)
        edges.discard(TemporalEdge(step.head, step.tail, step.time))
        vertices.append(step.head)
        times.append(step.time)
        v = step.head
        if v == t:
            return TemporalPath(tuple(vertices), tuple(times), False)
        options = leaving(v, step.time)
        if not options:
            raise TemporalGraphError(f"greedy extraction stuck at {v}: input is not s,t-minimal")
        step = min(options, key=key)


def extract_two_paths(minimal: TemporalGraph, s: str, t: str) -> tuple[TemporalPath, TemporalPath]:
    """Greedy extraction on an s,t-minimal graph.

    Walk from s; at each vertex leave by the unused incident temporal edge
    with the earliest admissible time.  The edges not used by the first
    path form the second one.
    """
    problems = degree_problems(minimal, s, t)
    if problems:
        raise TemporalGraphError("not s,t-minimal: " + "; ".join(problems))
    edges = set(minimal.temporal_edges)
    p = _greedy_path(edges, minimal, s, t)
    q = _greedy_path(edges, minimal, s, t)
    if edges:
        raise TemporalGraphError("greedy extraction left edges unused: input is not s,t-minimal")
    if not are_t_vertex_disjoint(p, q):
        raise TemporalGraphError("greedy extraction produced intersecting paths")
    return p, q


@dataclass
class TwoPathsResult:
    paths: tuple[TemporalPath, TemporalPath] | None
    trace: MinimalReductionTrace | None = None

    @property
    def found(self) -> bool:
        return self.paths is not None


def find_two_paths(graph: TemporalGraph, s: str, t: str, strict: bool = False) -> TwoPathsResult:
    """Two t-vertex disjoint s,t-paths, or ``paths=None`` when tp <= 1.

    Strict instances go through the semaphore image and are mapped back.
    """
    require_non_adjacent(graph, s, t)
    work, mapping = (graph, None)
    if strict:
        work, mapping = strictify(graph, s, t)
    trace = reduce_to_minimal(work, s, t)
    if trace is None:
        return TwoPathsResult(None)
    p, q = extract_two_paths(trace.graph, s, t)
    if mapping is not None:
        p, q = map_path_back(mapping, p), map_path_back(mapping, q)
    for path in (p, q):
        if path.problems_in(graph):
            raise AssertionError(f"invalid path {path}")
    if not are_t_vertex_disjoint(p, q):
        raise AssertionError("returned paths intersect")
    return TwoPathsResult((p, q), trace)
