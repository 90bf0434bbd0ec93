"""Semaphore transform: strict-model instance -> equivalent non-strict instance.

Every temporal edge (xy, t) gets two gadget vertices.  The gadget for the
traversal x -> y touches x at time 2t and y at time 2t+1, so a strict
path of the source becomes a non-strict path of the image that can only
move forward one original edge per time step.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable

from .core import (
    InvalidWalkError,
    TemporalEdge,
    TemporalGraph,
    TemporalPath,
    TemporalVertex,
    TemporalWalk,
    normalize_cut,
    require_non_adjacent,
)


def gadget_name(x: str, y: str, time: int) -> str:
    return f"w{time}:{x}>{y}"


@dataclass
class StrictMapping:
    source: TemporalGraph
    image: TemporalGraph
    s: str
    t: str
    # traversal (x, y, t) -> gadget vertex; and back
    gadgets: dict[tuple[str, str, int], str] = field(default_factory=dict)
    origin: dict[str, TemporalEdge] = field(default_factory=dict)

    @property
    def lifetime(self) -> int:
        return 2 * self.source.lifetime + 1

    def is_gadget(self, v: str) -> bool:
        return v in self.origin

    def table(self) -> list[tuple[TemporalEdge, list[str]]]:
        """One row per temporal edge of the source with its gadget vertices."""
        rows = []
        for e in self.source.temporal_edges:
            names = [self.gadgets[(e.tail, e.head, e.time)]]
            if not self.source.directed:
                names.append(self.gadgets[(e.head, e.tail, e.time)])
            rows.append((e, names))
        return rows

    def format_table(self) -> str:
        lines = []
        for e, names in self.table():
            lines.append(f"{e.tail} {e.head} {e.time} " + " ".join(names))
        return "\n".join(lines) + ("\n" if lines else "")


def strictify(graph: TemporalGraph, s: str, t: str) -> tuple[TemporalGraph, StrictMapping]:
    require_non_adjacent(graph, s, t)
    taken = set(graph.vertices)
    gadgets: dict[tuple[str, str, int], str] = {}
    origin: dict[str, TemporalEdge] = {}

    def fresh(x, y, time):
        name = gadget_name(x, y, time)
        while name in taken:
            name += "'"
        taken.add(name)
        gadgets[(x, y, time)] = name
        origin[name] = TemporalEdge(x, y, time)
        return name

    labels: dict[tuple[str, str], list[int]] = {}

    def add(a, b, time):
        labels.setdefault((a, b), []).append(time)

    for e in graph.temporal_edges:
        directions = [(e.tail, e.head)] if graph.directed else [(e.tail, e.head), (e.head, e.tail)]
        for x, y in directions:
            w = fresh(x, y, e.time)
            add(x, w, 2 * e.time)
            add(w, y, 2 * e.time + 1)
    image = TemporalGraph(
        ((a, b, sorted(ts)) for (a, b), ts in labels.items()),
        vertices=graph.vertices,
        directed=graph.directed,
    )
    return image, StrictMapping(graph, image, s, t, gadgets, origin)


def map_path_forward(mapping: StrictMapping, path: TemporalWalk) -> TemporalPath:
    if not path.strict:
        raise InvalidWalkError("map_path_forward expects a strict path")
    vertices = [path.vertices[0]]
    times: list[int] = []
    for e in path.edges:
        w = mapping.gadgets.get((e.tail, e.head, e.time))
        if w is None:
            raise InvalidWalkError(f"temporal edge {e} is not in the source graph")
        vertices += [w, e.head]
        times += [2 * e.time, 2 * e.time + 1]
    return TemporalPath(tuple(vertices), tuple(times), strict=False)


def map_path_back(mapping: StrictMapping, path: TemporalWalk) -> TemporalPath:
    vs, ts = path.vertices, path.times
    if len(vs) % 2 == 0:
        raise InvalidWalkError("image path must alternate original and gadget vertices")
    vertices = [vs[0]]
    times: list[int] = []
    for k in range(1, len(vs), 2):
        x, w, y = vs[k - 1], vs[k], vs[k + 1]
        e = mapping.origin.get(w)
        if e is None or (e.tail, e.head) != (x, y):
            raise InvalidWalkError(f"{x} -> {w} -> {y} is not a gadget traversal")
        if (ts[k - 1], ts[k]) != (2 * e.time, 2 * e.time + 1):
            raise InvalidWalkError(f"wrong times through gadget {w}")
        vertices.append(y)
        times.append(e.time)
    return TemporalPath(tuple(vertices), tuple(times), strict=True)


def map_cut_forward(mapping: StrictMapping, cut: Iterable) -> frozenset[TemporalVertex]:
    """(v, i) held in the source corresponds to (v, 2i-1) and (v, 2i) in the image."""
    out = set()
    for v, i in normalize_cut(cut, mapping.s, mapping.t):
        out.add(TemporalVertex(v, 2 * i - 1))
        out.add(TemporalVertex(v, 2 * i))
    return frozenset(out)


def map_cut_back(mapping: StrictMapping, cut: Iterable) -> frozenset[TemporalVertex]:
    """Translate an image cut to a strict cut of the source.

    A gadget vertex for the traversal x -> y at time a is replaced by the
    departure (x, a) or the arrival (y, a+1), whichever endpoint is not s or
    t; the smaller token wins when both qualify.  Other elements keep their
    vertex and halve their time, rounding up.
    """
    s, t = mapping.s, mapping.t
    tau = mapping.source.lifetime
    out = set()
    for v, i in normalize_cut(cut, s, t):
        e = mapping.origin.get(v)
        if e is None:
            out.add(TemporalVertex(v, math.ceil(i / 2)))
            continue
        options = []
        if e.tail not in (s, t):
            options.append(TemporalVertex(e.tail, e.time))
        if e.head not in (s, t) and e.time + 1 <= tau:
            options.append(TemporalVertex(e.head, e.time + 1))
        if not options:
            # the traversal cannot be part of any s,t-path through an internal vertex
            continue
        out.add(min(options, key=lambda x: x.vertex))
    return frozenset(out)


def check_mapping(mapping: StrictMapping) -> list[str]:
    """Structural invariants of the transform (empty list when all hold)."""
    problems = []
    src, img = mapping.source, mapping.image
    per_edge = 1 if src.directed else 2
    if img.n != src.n + per_edge * src.num_temporal_edges:
        problems.append("vertex count")
    if src.num_temporal_edges and img.lifetime != mapping.lifetime:
        problems.append("lifetime")
    for w in mapping.origin:
        times = sorted(e.time for e in img.incident(w))
        if len(times) != 2 or times[0] % 2 or times[1] != times[0] + 1:
            problems.append(f"gadget {w}")
    if img.adjacent(mapping.s, mapping.t):
        problems.append("endpoints adjacent")
    return problems

