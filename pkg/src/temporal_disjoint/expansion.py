"""Static expansion and unit vertex-capacity max flow (walk version of Menger)."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

from .core import (
    TemporalEdge,
    TemporalGraph,
    TemporalGraphError,
    TemporalVertex,
    TemporalWalk,
    require_non_adjacent,
    require_vertices,
)

SOURCE = "<s>"
TARGET = "<t>"

_BIG = 1 << 30


@dataclass
class StaticExpansion:
    """Time-expanded digraph with all copies of s (resp. t) identified.

    Node 0 is the source, node 1 the target; every other node is a
    :class:`TemporalVertex`.  Each arc carries the temporal edge it was
    built from, or ``None`` for a waiting arc.
    """

    s: str
    t: str
    strict: bool
    nodes: list
    arcs: list[tuple[int, int, TemporalEdge | None]]
    index: dict = field(default_factory=dict)

    @property
    def num_nodes(self) -> int:
        return len(self.nodes)

    def successors(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in self.nodes]
        for a, b, _ in self.arcs:
            out[a].append(b)
        return out


def build_expansion(
    graph: TemporalGraph,
    s: str,
    t: str,
    strict: bool = False,
    removed: Iterable = (),
) -> StaticExpansion:
    """Build the static expansion.

    Non-strict crossing arcs join ``(u, i)`` to ``(v, i)``; strict ones join
    ``(u, i)`` to ``(v, i + 1)`` so that a node ``(v, j)`` always means
    "``v`` is held at time ``j``".  Nodes listed in ``removed`` are left out.
    """
    require_vertices(graph, s, t)
    if s == t:
        raise TemporalGraphError("source and target coincide")
    tau = graph.lifetime
    removed = {TemporalVertex(v, int(i)) for v, i in removed}
    nodes: list = [SOURCE, TARGET]
    index: dict = {SOURCE: 0, TARGET: 1}
    for v in graph.vertices:
        if v in (s, t):
            continue
        for i in range(1, tau + 1):
            tv = TemporalVertex(v, i)
            if tv not in removed:
                index[tv] = len(nodes)
                nodes.append(tv)
    arcs: list[tuple[int, int, TemporalEdge | None]] = []
    for v in graph.vertices:
        if v in (s, t):
            continue
        for i in range(1, tau):
            a, b = index.get(TemporalVertex(v, i)), index.get(TemporalVertex(v, i + 1))
            if a is not None and b is not None:
                arcs.append((a, b, None))
    shift = 1 if strict else 0
    for time in sorted(graph.arcs_by_time):
        for u, v in graph.arcs_by_time[time]:
            if u == t or v == s:
                continue
            a = 0 if u == s else index.get(TemporalVertex(u, time))
            b = 1 if v == t else index.get(TemporalVertex(v, time + shift))
            if a is not None and b is not None:
                arcs.append((a, b, TemporalEdge(u, v, time)))
    return StaticExpansion(s, t, strict, nodes, arcs, index)


@dataclass
class FlowResult:
    value: int
    paths: list[list[int]]
    cut: frozenset[TemporalVertex]
    walks: list[TemporalWalk] = field(default_factory=list)


class _Residual:
    def __init__(self, n: int):
        self.head: list[int] = []
        self.cap: list[int] = []
        self.adj: list[list[int]] = [[] for _ in range(n)]

    def add(self, a: int, b: int, cap: int) -> int:
        self.adj[a].append(len(self.head))
        self.head.append(b)
        self.cap.append(cap)
        self.adj[b].append(len(self.head))
        self.head.append(a)
        self.cap.append(0)
        return len(self.head) - 2

    def augment(self, src: int, dst: int) -> bool:
        parent = [-1] * len(self.adj)
        parent[src] = -2
        queue = deque([src])
        while queue:
            x = queue.popleft()
            for e in self.adj[x]:
                y = self.head[e]
                if self.cap[e] > 0 and parent[y] == -1:
                    parent[y] = e
                    if y == dst:
                        while y != src:
                            e = parent[y]
                            self.cap[e] -= 1
                            self.cap[e ^ 1] += 1
                            y = self.head[e ^ 1]
                        return True
                    queue.append(y)
        return False

    def reachable(self, src: int) -> list[bool]:
        seen = [False] * len(self.adj)
        seen[src] = True
        stack = [src]
        while stack:
            x = stack.pop()
            for e in self.adj[x]:
                y = self.head[e]
                if self.cap[e] > 0 and not seen[y]:
                    seen[y] = True
                    stack.append(y)
        return seen


def max_flow_unit_vertex(expansion: StaticExpansion) -> FlowResult:
    """Maximum number of internally node-disjoint source->target paths.

    Interior nodes are split into in/out halves joined by a unit arc; the
    identified endpoints are uncapacitated.  The minimum cut is read off
    the residual graph as the split arcs leaving the source side.
    """
    n = expansion.num_nodes
    # node x -> (in = 2x, out = 2x + 1); endpoints use one half for both
    res = _Residual(2 * n)
    split_arc = {}
    for x in range(2, n):
        split_arc[x] = res.add(2 * x, 2 * x + 1, 1)
    src, dst = 1, 2 * 1  # out-half of source, in-half of target
    arc_ids = []
    for a, b, _ in expansion.arcs:
        arc_ids.append(res.add(2 * a + 1, 2 * b, _BIG))
    value = 0
    while res.augment(src, dst):
        value += 1
    seen = res.reachable(src)
    cut = frozenset(expansion.nodes[x] for x in range(2, n) if seen[2 * x] and not seen[2 * x + 1])

    # flow per expansion arc, then peel off paths (cancelling any cycles)
    flow_out: list[list[int]] = [[] for _ in range(n)]
    for k, (a, b, _) in enumerate(expansion.arcs):
        f = res.cap[arc_ids[k] ^ 1]
        for _ in range(f):
            flow_out[a].append(k)
    paths: list[list[int]] = []
    for _ in range(value):
        path_nodes = [0]
        path_arcs: list[int] = []
        pos = {0: 0}
        x = 0
        while x != 1:
            k = flow_out[x].pop()
            y = expansion.arcs[k][1]
            if y in pos:
                # drop the cycle y -> ... -> x -> y
                cut_at = pos[y]
                for z in path_nodes[cut_at + 1 :]:
                    del pos[z]
                path_nodes = path_nodes[: cut_at + 1]
                path_arcs = path_arcs[:cut_at]
            else:
                pos[y] = len(path_nodes)
                path_nodes.append(y)
                path_arcs.append(k)
            x = y
        paths.append(path_arcs)
    if not (value == len(paths) == len(cut)):
        raise AssertionError(f"max-flow/min-cut mismatch: {value} {len(paths)} {len(cut)}")
    return FlowResult(value, paths, cut)


def arcs_to_walk(expansion: StaticExpansion, arc_path: list[int]) -> TemporalWalk:
    """Drop waiting arcs and read the crossing arcs off as temporal edges."""
    vertices = [expansion.s]
    times = []
    for k in arc_path:
        e = expansion.arcs[k][2]
        if e is not None:
            vertices.append(e.head)
            times.append(e.time)
    return TemporalWalk(tuple(vertices), tuple(times), expansion.strict)


def walks_menger(
    graph: TemporalGraph,
    s: str,
    t: str,
    strict: bool = False,
    removed: Iterable = (),
) -> FlowResult:
    """tw(s,t) = tc(s,t) with witnesses: disjoint temporal walks and a walk cut."""
    require_non_adjacent(graph, s, t)
    expansion = build_expansion(graph, s, t, strict, removed)
    result = max_flow_unit_vertex(expansion)
    result.walks = [arcs_to_walk(expansion, p) for p in result.paths]
    return result
