"""Temporal graphs, temporal walks/paths and occupancy semantics.

A temporal graph is an underlying simple (di)graph whose edges carry a
sorted tuple of active timesteps.  Vertices are arbitrary non-whitespace
string tokens.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, NamedTuple


class TemporalGraphError(ValueError):
    """Base class for invalid inputs to the temporal graph routines."""


class GraphFormatError(TemporalGraphError):
    pass


class UnknownVertexError(TemporalGraphError):
    pass


class AdjacentTerminalsError(TemporalGraphError):
    pass


class InvalidWalkError(TemporalGraphError):
    pass


class TemporalVertex(NamedTuple):
    vertex: str
    time: int


class TemporalEdge(NamedTuple):
    tail: str
    head: str
    time: int


class Occupancy(enum.Enum):
    """How long a walk holds an internal vertex.

    CLOSED holds ``[arrival, departure]``; HALF_OPEN holds
    ``[arrival + 1, departure]`` and only makes sense for strict walks.
    """

    CLOSED = "closed"
    HALF_OPEN = "half-open"


def default_occupancy(strict: bool) -> Occupancy:
    return Occupancy.HALF_OPEN if strict else Occupancy.CLOSED


class TemporalGraph:
    """Immutable temporal (directed) graph.

    ``edges`` is an iterable of ``(u, v, times)``.  Undirected edges are
    stored under the key ``(min(u, v), max(u, v))``.  The constructor does
    not reject malformed input; call :func:`validate` for that (the text
    parser does so automatically).
    """

    def __init__(self, edges: Iterable = (), vertices: Iterable[str] = (), directed: bool = False):
        self.directed = bool(directed)
        order: dict[str, None] = dict.fromkeys(vertices)
        raw = []
        labels: dict[tuple[str, str], tuple[int, ...]] = {}
        for u, v, times in edges:
            times = tuple(int(x) for x in times)
            raw.append((u, v, times))
            order.setdefault(u)
            order.setdefault(v)
            key = self._key(u, v)
            if key in labels:
                labels[key] = labels[key] + times
            else:
                labels[key] = times
        self.vertices: tuple[str, ...] = tuple(order)
        self.labels: dict[tuple[str, str], tuple[int, ...]] = labels
        self._raw = tuple(raw)

    def _key(self, u: str, v: str) -> tuple[str, str]:
        if self.directed or u <= v:
            return (u, v)
        return (v, u)

    # -- basic queries -----------------------------------------------------

    @cached_property
    def lifetime(self) -> int:
        return max((max(ts) for ts in self.labels.values() if ts), default=1)

    @property
    def n(self) -> int:
        return len(self.vertices)

    @cached_property
    def _vertex_set(self) -> frozenset[str]:
        return frozenset(self.vertices)

    def __contains__(self, v: object) -> bool:
        return v in self._vertex_set

    def has_edge(self, u: str, v: str) -> bool:
        return self._key(u, v) in self.labels

    def adjacent(self, u: str, v: str) -> bool:
        return self.has_edge(u, v) or (self.directed and self.has_edge(v, u))

    def label(self, u: str, v: str) -> tuple[int, ...]:
        return self.labels.get(self._key(u, v), ())

    def has_temporal_edge(self, u: str, v: str, time: int) -> bool:
        return time in self.label(u, v)

    @cached_property
    def temporal_edges(self) -> tuple[TemporalEdge, ...]:
        """All temporal edges, ordered by (time, tail, head)."""
        out = [TemporalEdge(u, v, t) for (u, v), ts in self.labels.items() for t in ts]
        out.sort(key=lambda e: (e.time, e.tail, e.head))
        return tuple(out)

    @property
    def num_temporal_edges(self) -> int:
        return sum(len(ts) for ts in self.labels.values())

    @cached_property
    def arcs_by_time(self) -> dict[int, list[tuple[str, str]]]:
        """Traversable arcs per timestep; undirected edges appear both ways."""
        out: dict[int, list[tuple[str, str]]] = {}
        for (u, v), ts in self.labels.items():
            for t in ts:
                bucket = out.setdefault(t, [])
                bucket.append((u, v))
                if not self.directed:
                    bucket.append((v, u))
        return out

    @cached_property
    def _incident(self) -> dict[str, list[TemporalEdge]]:
        inc: dict[str, list[TemporalEdge]] = {v: [] for v in self.vertices}
        for e in self.temporal_edges:
            inc[e.tail].append(e)
            inc[e.head].append(e)
        return inc

    def incident(self, v: str) -> list[TemporalEdge]:
        """Temporal edges touching ``v`` (the set delta^T(v))."""
        return self._incident.get(v, [])

    def temporal_degree(self, v: str) -> int:
        return len(self.incident(v))

    def in_out_degree(self, v: str) -> tuple[int, int]:
        inc = self.incident(v)
        return sum(e.head == v for e in inc), sum(e.tail == v for e in inc)

    def snapshot(self, time: int) -> list[tuple[str, str]]:
        return [(u, v) for (u, v), ts in self.labels.items() if time in ts]

    # -- derived graphs ----------------------------------------------------

    def edge_list(self) -> list[tuple[str, str, tuple[int, ...]]]:
        return [(u, v, ts) for (u, v), ts in self.labels.items()]

    def with_labels(self, labels: dict[tuple[str, str], Iterable[int]]) -> "TemporalGraph":
        """Same vertex set, new label function (empty label lists drop the edge)."""
        edges = []
        for (u, v), ts in labels.items():
            ts = tuple(sorted(set(ts)))
            if ts:
                edges.append((u, v, ts))
        return TemporalGraph(edges, vertices=self.vertices, directed=self.directed)

    def without(self, removed: Iterable[TemporalEdge]) -> "TemporalGraph":
        gone: dict[tuple[str, str], set[int]] = {}
        for e in removed:
            gone.setdefault(self._key(e.tail, e.head), set()).add(e.time)
        if not gone:
            return self
        return self.with_labels({k: [t for t in ts if t not in gone.get(k, ())] for k, ts in self.labels.items()})

    def restricted_to(self, kept: Iterable[TemporalEdge]) -> "TemporalGraph":
        labels: dict[tuple[str, str], list[int]] = {}
        for e in kept:
            labels.setdefault(self._key(e.tail, e.head), []).append(e.time)
        return self.with_labels(labels)

    # -- comparison --------------------------------------------------------

    def _canonical(self):
        return (
            self.directed,
            frozenset(self.vertices),
            frozenset((k, tuple(sorted(ts))) for k, ts in self.labels.items()),
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TemporalGraph):
            return NotImplemented
        return self._canonical() == other._canonical()

    def __hash__(self) -> int:
        return hash(self._canonical())

    def __repr__(self) -> str:
        kind = "directed" if self.directed else "undirected"
        return f"<TemporalGraph {kind} n={self.n} edges={len(self.labels)} lifetime={self.lifetime}>"


def validate(graph: TemporalGraph) -> list[str]:
    """Return every invariant violation of ``graph`` (empty list when valid)."""
    problems: list[str] = []
    seen: set[tuple[str, str]] = set()
    for u, v, times in graph._raw:
        where = f"edge {u} {v}"
        if u == v:
            problems.append(f"{where}: self-loop")
        for tok in (u, v):
            if not isinstance(tok, str) or not tok or any(c.isspace() for c in tok):
                problems.append(f"{where}: bad vertex token {tok!r}")
        key = graph._key(u, v)
        if key in seen:
            problems.append(f"{where}: duplicate edge")
        seen.add(key)
        if not times:
            problems.append(f"{where}: empty label list")
        if any(t < 1 for t in times):
            problems.append(f"{where}: timestep below 1")
        if any(a >= b for a, b in zip(times, times[1:])):
            problems.append(f"{where}: labels not ascending")
    return problems


def require_vertices(graph: TemporalGraph, *vs: str) -> None:
    for v in vs:
        if v not in graph:
            raise UnknownVertexError(f"unknown vertex {v!r}")


def require_non_adjacent(graph: TemporalGraph, s: str, t: str) -> None:
    require_vertices(graph, s, t)
    if s == t:
        raise AdjacentTerminalsError("source and target coincide")
    if graph.adjacent(s, t):
        raise AdjacentTerminalsError(f"{s} and {t} are adjacent")


# ---------------------------------------------------------------------------
# walks and paths


@dataclass(frozen=True)
class TemporalWalk:
    """Alternating vertex / timestep sequence ``(v1, t1, v2, ..., t_{p-1}, vp)``."""

    vertices: tuple[str, ...]
    times: tuple[int, ...]
    strict: bool = False

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "times", tuple(int(t) for t in self.times))
        if not self.vertices:
            raise InvalidWalkError("empty walk")
        if len(self.times) != len(self.vertices) - 1:
            raise InvalidWalkError("need exactly one timestep per edge")
        for a, b in zip(self.times, self.times[1:]):
            if a > b or (self.strict and a == b):
                raise InvalidWalkError(f"timesteps not monotone: {self.times}")

    @classmethod
    def from_sequence(cls, seq, strict: bool = False):
        seq = list(seq)
        return cls(tuple(str(x) for x in seq[0::2]), tuple(seq[1::2]), strict)

    def as_sequence(self) -> tuple:
        out: list = [self.vertices[0]]
        for t, v in zip(self.times, self.vertices[1:]):
            out += [t, v]
        return tuple(out)

    @property
    def source(self) -> str:
        return self.vertices[0]

    @property
    def target(self) -> str:
        return self.vertices[-1]

    @property
    def edges(self) -> tuple[TemporalEdge, ...]:
        return tuple(TemporalEdge(u, v, t) for u, v, t in zip(self.vertices, self.vertices[1:], self.times))

    @property
    def is_path(self) -> bool:
        return len(set(self.vertices)) == len(self.vertices)

    def __len__(self) -> int:
        return len(self.times)

    def problems_in(self, graph: TemporalGraph) -> list[str]:
        out = []
        for e in self.edges:
            if e.tail == e.head:
                out.append(f"self-loop step at {e.tail}")
            elif not graph.has_temporal_edge(e.tail, e.head, e.time):
                out.append(f"no temporal edge {e.tail}-{e.head} at {e.time}")
        return out

    def is_valid_in(self, graph: TemporalGraph) -> bool:
        return all(v in graph for v in self.vertices) and not self.problems_in(graph)

    def occupancy(self, convention: Occupancy | None = None) -> dict[str, set[int]]:
        """Timesteps during which each internal vertex is held."""
        convention = self._convention(convention)
        shift = 1 if convention is Occupancy.HALF_OPEN else 0
        ends = {self.source, self.target}
        occ: dict[str, set[int]] = {}
        for i in range(1, len(self.vertices) - 1):
            v = self.vertices[i]
            if v in ends:
                continue
            occ.setdefault(v, set()).update(range(self.times[i - 1] + shift, self.times[i] + 1))
        return occ

    def endpoint_occupancy(self) -> set[TemporalVertex]:
        if not self.times:
            return set()
        shift = 1 if self.strict else 0
        return {TemporalVertex(self.source, self.times[0]), TemporalVertex(self.target, self.times[-1] + shift)}

    def temporal_vertices(self, convention: Occupancy | None = None) -> frozenset[TemporalVertex]:
        return frozenset(TemporalVertex(v, t) for v, ts in self.occupancy(convention).items() for t in ts)

    def internal_vertices(self) -> frozenset[str]:
        return frozenset(self.vertices[1:-1]) - {self.source, self.target}

    def _convention(self, convention: Occupancy | None) -> Occupancy:
        if convention is None:
            return default_occupancy(self.strict)
        if convention is Occupancy.HALF_OPEN and not self.strict:
            raise TemporalGraphError("half-open occupancy requires a strict walk")
        return convention

    def render(self) -> str:
        parts = [self.vertices[0]]
        for t, v in zip(self.times, self.vertices[1:]):
            parts.append(f"-({t})- {v}")
        return " ".join(parts)

    def __str__(self) -> str:
        return self.render()


class TemporalPath(TemporalWalk):
    """A temporal walk that never repeats a vertex."""

    def __post_init__(self):
        super().__post_init__()
        if len(set(self.vertices)) != len(self.vertices):
            raise InvalidWalkError(f"repeated vertex in path {self.vertices}")


def as_path(walk: TemporalWalk) -> TemporalPath:
    if isinstance(walk, TemporalPath):
        return walk
    return TemporalPath(walk.vertices, walk.times, walk.strict)


def parse_path(text: str, strict: bool = False) -> TemporalPath:
    """Parse the rendering ``s -(1)- u -(2)- t``."""
    toks = text.split()
    if not toks:
        raise GraphFormatError("empty path")
    vertices, times = [toks[0]], []
    rest = toks[1:]
    if len(rest) % 2:
        raise GraphFormatError(f"malformed path: {text!r}")
    for step, v in zip(rest[0::2], rest[1::2]):
        if not (step.startswith("-(") and step.endswith(")-")):
            raise GraphFormatError(f"malformed step {step!r}")
        times.append(int(step[2:-2]))
        vertices.append(v)
    return TemporalPath(tuple(vertices), tuple(times), strict)


def are_t_vertex_disjoint(p: TemporalWalk, q: TemporalWalk, convention: Occupancy | None = None) -> bool:
    if (p.source, p.target) != (q.source, q.target):
        raise TemporalGraphError("walks have different endpoints")
    if p.strict != q.strict:
        raise TemporalGraphError("walks use different models")
    return p.temporal_vertices(convention).isdisjoint(q.temporal_vertices(convention))


def hits_cut(walk: TemporalWalk, cut: Iterable, convention: Occupancy | None = None) -> bool:
    cut = {TemporalVertex(v, int(t)) for v, t in cut}
    return not walk.temporal_vertices(convention).isdisjoint(cut)


def normalize_cut(cut: Iterable, s: str | None = None, t: str | None = None) -> frozenset[TemporalVertex]:
    out = frozenset(TemporalVertex(str(v), int(i)) for v, i in cut)
    bad = [x for x in out if x.vertex in (s, t)]
    if bad:
        raise TemporalGraphError(f"cut touches an endpoint: {sorted(bad)}")
    return out


def sorted_cut(cut: Iterable[TemporalVertex]) -> list[TemporalVertex]:
    return sorted(cut, key=lambda x: (x.vertex, x.time))


# ---------------------------------------------------------------------------
# text format


def iter_lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def parse_graph(text: str) -> TemporalGraph:
    """Parse the line format ``graph directed|undirected`` / ``edge u v t...``.

    ``vertex <v>`` lines declare isolated vertices.
    """
    directed = None
    edges = []
    vertices = []
    for lineno, toks in iter_lines(text):
        kind = toks[0]
        if directed is None:
            if kind != "graph" or len(toks) != 2 or toks[1] not in ("directed", "undirected"):
                raise GraphFormatError(f"line {lineno}: expected 'graph directed|undirected'")
            directed = toks[1] == "directed"
        elif kind == "edge":
            if len(toks) < 4:
                raise GraphFormatError(f"line {lineno}: edge needs two vertices and at least one timestep")
            try:
                times = [int(x) for x in toks[3:]]
            except ValueError:
                raise GraphFormatError(f"line {lineno}: non-integer timestep") from None
            edges.append((toks[1], toks[2], times))
        elif kind == "vertex":
            vertices.extend(toks[1:])
        else:
            raise GraphFormatError(f"line {lineno}: unknown record {kind!r}")
    if directed is None:
        raise GraphFormatError("missing 'graph' header")
    graph = TemporalGraph(edges, vertices=vertices, directed=directed)
    problems = validate(graph)
    if problems:
        raise GraphFormatError("; ".join(problems))
    return graph


def format_graph(graph: TemporalGraph) -> str:
    lines = [f"graph {'directed' if graph.directed else 'undirected'}"]
    touched = {x for k in graph.labels for x in k}
    isolated = [v for v in graph.vertices if v not in touched]
    if isolated:
        lines.append("vertex " + " ".join(isolated))
    for (u, v), ts in sorted(graph.labels.items()):
        lines.append(f"edge {u} {v} " + " ".join(map(str, ts)))
    return "\n".join(lines) + "\n"


def read_graph(path) -> TemporalGraph:
    with open(path) as fh:
        return parse_graph(fh.read())


def write_graph(graph: TemporalGraph, path) -> None:
    with open(path, "w") as fh:
        fh.write(format_graph(graph))


def parse_cut(text: str) -> frozenset[TemporalVertex]:
    out = set()
    for lineno, toks in iter_lines(text):
        if len(toks) != 2:
            raise GraphFormatError(f"line {lineno}: expected '<vertex> <time>'")
        try:
            out.add(TemporalVertex(toks[0], int(toks[1])))
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-integer timestep") from None
    return frozenset(out)


def format_cut(cut: Iterable[TemporalVertex]) -> str:
    return "".join(f"{v} {t}\n" for v, t in sorted_cut(cut))
