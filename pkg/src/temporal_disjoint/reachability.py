"""Earliest-arrival reachability and walk simplification."""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Callable

from .core import (
    TemporalEdge,
    TemporalGraph,
    TemporalPath,
    TemporalWalk,
    require_vertices,
)

INF = math.inf

# ``allow(u, v, time)`` decides whether the arc u->v may be used at ``time``.
ArcFilter = Callable[[str, str, int], bool]


@dataclass
class ArrivalTable:
    source: str
    strict: bool
    arrival: dict[str, float]
    pred: dict[str, TemporalEdge] = field(default_factory=dict)

    def __getitem__(self, v: str) -> float:
        return self.arrival.get(v, INF)

    def reachable(self, v: str) -> bool:
        return self[v] != INF


def _adjacency(graph: TemporalGraph) -> list[tuple[int, dict[str, list[str]]]]:
    cached = graph.__dict__.get("_adj_by_time")
    if cached is None:
        cached = []
        for time in sorted(graph.arcs_by_time):
            adj: dict[str, list[str]] = {}
            for u, v in graph.arcs_by_time[time]:
                adj.setdefault(u, []).append(v)
            cached.append((time, adj))
        graph.__dict__["_adj_by_time"] = cached
    return cached


def _sweep(graph, s, strict, allow=None, target=None, absorbing=()):
    arrival: dict[str, float] = {s: 0}
    pred: dict[str, TemporalEdge] = {}
    for time, adj in _adjacency(graph):
        if strict:
            fresh = []
            for u, heads in adj.items():
                a = arrival.get(u)
                if a is None or a >= time or u in absorbing:
                    continue
                for v in heads:
                    if v not in arrival and (allow is None or allow(u, v, time)):
                        fresh.append((u, v))
            for u, v in fresh:
                if v not in arrival:
                    arrival[v] = time
                    pred[v] = TemporalEdge(u, v, time)
        else:
            queue = deque(u for u in adj if u in arrival and u not in absorbing)
            while queue:
                u = queue.popleft()
                for v in adj.get(u, ()):
                    if v not in arrival and (allow is None or allow(u, v, time)):
                        arrival[v] = time
                        pred[v] = TemporalEdge(u, v, time)
                        if v not in absorbing:
                            queue.append(v)
        if target is not None and target in arrival:
            break
    return arrival, pred


def earliest_arrival(graph: TemporalGraph, s: str, strict: bool = False, allow: ArcFilter | None = None) -> ArrivalTable:
    """Earliest time each vertex can be reached from ``s``.

    ``arrival[s]`` is 0; unreachable vertices report ``INF``.  In the
    non-strict model a snapshot may be crossed arbitrarily often, so each
    timestep runs a breadth-first closure seeded by every vertex reached
    so far.
    """
    require_vertices(graph, s)
    arrival, pred = _sweep(graph, s, strict, allow)
    return ArrivalTable(s, strict, arrival, pred)


def find_walk(graph: TemporalGraph, s: str, t: str, strict: bool = False, allow: ArcFilter | None = None) -> TemporalWalk | None:
    """An earliest-arriving temporal s,t-walk (stops the sweep at ``t``)."""
    arrival, pred = _sweep(graph, s, strict, allow, target=t, absorbing=(t,))
    if t not in arrival:
        return None
    return _trace(s, t, pred, strict)


def reaches(graph: TemporalGraph, s: str, t: str, strict: bool = False, allow: ArcFilter | None = None) -> bool:
    arrival, _ = _sweep(graph, s, strict, allow, target=t, absorbing=(t,))
    return t in arrival


def _trace(s, v, pred, strict):
    vertices, times = [v], []
    while v != s:
        e = pred[v]
        times.append(e.time)
        v = e.tail
        vertices.append(v)
    return TemporalWalk(tuple(reversed(vertices)), tuple(reversed(times)), strict)


def extract_walk(table: ArrivalTable, v: str) -> TemporalWalk | None:
    if not table.reachable(v):
        return None
    return _trace(table.source, v, table.pred, table.strict)


def latest_departure(graph: TemporalGraph, t: str, strict: bool = False) -> dict[str, float]:
    """Latest time each vertex can still leave and reach ``t`` (``t`` maps to INF)."""
    depart: dict[str, float] = {t: INF}
    for time, adj in reversed(_adjacency(graph)):
        radj: dict[str, list[str]] = {}
        for u, heads in adj.items():
            for v in heads:
                radj.setdefault(v, []).append(u)
        if strict:
            fresh = [u for v, tails in radj.items() if depart.get(v, -INF) > time for u in tails]
            for u in fresh:
                if u not in depart:
                    depart[u] = time
        else:
            queue = deque(v for v in radj if depart.get(v, -INF) >= time)
            while queue:
                v = queue.popleft()
                for u in radj.get(v, ()):
                    if u not in depart:
                        depart[u] = time
                        queue.append(u)
    return depart


def useful_edges(graph: TemporalGraph, s: str, t: str, strict: bool = False) -> list[TemporalEdge]:
    """Temporal edges lying on at least one s,t-walk that starts at s and stops at t."""
    arrival, _ = _sweep(graph, s, strict, absorbing=(t,))
    depart = latest_departure(graph, t, strict)
    # the source is never re-entered and the target never left
    arrival = {v: a for v, a in arrival.items() if v != t}
    depart = {v: d for v, d in depart.items() if v != s}

    def ok(u, v, time):
        a, d = arrival.get(u), depart.get(v)
        if a is None or d is None:
            return False
        return a < time < d if strict else a <= time <= d

    out = []
    for e in graph.temporal_edges:
        if ok(e.tail, e.head, e.time) or (not graph.directed and ok(e.head, e.tail, e.time)):
            out.append(e)
    return out


def walk_to_path(walk: TemporalWalk) -> TemporalPath:
    """Remove loops: wait at the first visit of a repeated vertex until its last departure."""
    vertices, times = list(walk.vertices), list(walk.times)
    while True:
        last = {v: i for i, v in enumerate(vertices)}
        for i, v in enumerate(vertices):
            j = last[v]
            if j > i:
                vertices = vertices[: i + 1] + vertices[j + 1 :]
                times = times[:i] + times[j:]
                break
        else:
            return TemporalPath(tuple(vertices), tuple(times), walk.strict)
