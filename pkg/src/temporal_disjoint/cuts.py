"""Temporal-vertex path-cuts: verification, minimum cut search, tp >= 2."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator

from .core import (
    TemporalGraph,
    TemporalPath,
    TemporalVertex,
    default_occupancy,
    normalize_cut,
    require_non_adjacent,
    sorted_cut,
)
from .reachability import find_walk, useful_edges, walk_to_path
from .strictify import map_cut_forward, map_path_back, strictify


@dataclass(frozen=True)
class CutCheck:
    is_cut: bool
    witness: TemporalPath | None = None

    def __bool__(self) -> bool:
        return self.is_cut


def windows(times: Iterable[int], tau: int) -> list[tuple[int, int]]:
    """Nonempty inclusive intervals of [1, tau] left free by the given appearance times."""
    out = []
    lo = 1
    for i in sorted(set(times)):
        if lo <= i - 1:
            out.append((lo, i - 1))
        lo = i + 1
    if lo <= tau:
        out.append((lo, tau))
    return out


def window_assignments(cut: Iterable[TemporalVertex], tau: int) -> Iterator[dict[str, tuple[int, int]]]:
    """Every choice of one free window per cut vertex (mixed-radix order)."""
    by_vertex: dict[str, list[int]] = {}
    for v, i in cut:
        by_vertex.setdefault(v, []).append(i)
    names = sorted(by_vertex)
    choices = [windows(by_vertex[v], tau) for v in names]
    for combo in itertools.product(*choices):
        yield dict(zip(names, combo))


def _window_filter(assignment: dict[str, tuple[int, int]], removed: frozenset[str]):
    def allow(u, v, time):
        if u in removed or v in removed:
            return False
        w = assignment.get(u)
        if w is not None and not w[0] <= time <= w[1]:
            return False
        w = assignment.get(v)
        return w is None or w[0] <= time <= w[1]

    return allow


def _verify_nonstrict(graph: TemporalGraph, s: str, t: str, cut: frozenset[TemporalVertex]) -> CutCheck:
    tau = graph.lifetime
    # a vertex cut at every timestep can never be visited
    blocked = frozenset(v for v in {x.vertex for x in cut} if not windows([x.time for x in cut if x.vertex == v], tau))
    live = frozenset(x for x in cut if x.vertex not in blocked)
    for assignment in window_assignments(live, tau):
        walk = find_walk(graph, s, t, False, _window_filter(assignment, blocked))
        if walk is not None:
            return CutCheck(False, walk_to_path(walk))
    return CutCheck(True)


def verify_cut(graph: TemporalGraph, s: str, t: str, cut: Iterable, strict: bool = False) -> CutCheck:
    """Is ``cut`` met by every temporal s,t-path?  If not, return a path avoiding it.

    Each cut vertex is confined to one of the windows between its cut
    times; the cut fails exactly when, for some choice of windows, t is
    reachable.  Strict instances are checked on their semaphore image.
    """
    require_non_adjacent(graph, s, t)
    cut = normalize_cut(cut, s, t)
    if not strict:
        return _verify_nonstrict(graph, s, t, cut)
    image, mapping = strictify(graph, s, t)
    res = _verify_nonstrict(image, s, t, map_cut_forward(mapping, cut))
    if res.is_cut:
        return res
    return CutCheck(False, map_path_back(mapping, res.witness))


def is_cut(graph: TemporalGraph, s: str, t: str, cut: Iterable, strict: bool = False) -> bool:
    return verify_cut(graph, s, t, cut, strict).is_cut


def candidate_universe(graph: TemporalGraph, s: str, t: str, strict: bool = False) -> list[TemporalVertex]:
    """Temporal vertices that some s,t-walk can hold, sorted by (vertex, time)."""
    from .expansion import build_expansion

    exp = build_expansion(graph.restricted_to(useful_edges(graph, s, t, strict)), s, t, strict)
    succ = exp.successors()
    pred: list[list[int]] = [[] for _ in exp.nodes]
    for a, bs in enumerate(succ):
        for b in bs:
            pred[b].append(a)

    def closure(start, nbrs):
        seen = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in nbrs[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return seen

    both = closure(0, succ) & closure(1, pred)
    return sorted_cut(exp.nodes[x] for x in both if x > 1)


@dataclass(frozen=True)
class MinCutResult:
    size: int | None
    cut: frozenset[TemporalVertex] | None
    exceeded: bool = False


def find_min_cut(graph: TemporalGraph, s: str, t: str, h_max: int, strict: bool = False) -> MinCutResult:
    """Smallest cut of size <= h_max, lexicographically first among equals.

    Candidates are subsets of the temporal vertices lying on some walk.  A
    candidate is only verified once it meets every witness path collected
    so far, which skips the bulk of the subsets cheaply.
    """
    require_non_adjacent(graph, s, t)
    if h_max < 0:
        raise ValueError("h_max must be nonnegative")
    convention = default_occupancy(strict)
    universe = candidate_universe(graph, s, t, strict)
    bit = {x: 1 << k for k, x in enumerate(universe)}
    witnesses: list[int] = []

    def mask_of(path: TemporalPath) -> int:
        m = 0
        for x in path.temporal_vertices(convention):
            m |= bit.get(x, 0)
        return m

    first = find_walk(graph, s, t, strict)
    if first is None:
        return MinCutResult(0, frozenset())
    witnesses.append(mask_of(walk_to_path(first)))

    for h in range(1, h_max + 1):
        for combo in itertools.combinations(range(len(universe)), h):
            m = 0
            for k in combo:
                m |= 1 << k
            if any(not (m & w) for w in witnesses):
                continue
            cand = [universe[k] for k in combo]
            res = verify_cut(graph, s, t, cand, strict)
            if res.is_cut:
                return MinCutResult(h, frozenset(cand))
            witnesses.append(mask_of(res.witness))
    return MinCutResult(None, None, exceeded=True)


def singleton_cut(graph: TemporalGraph, s: str, t: str, strict: bool = False) -> TemporalVertex | None | bool:
    """A single temporal vertex meeting every s,t-path, or None.

    Returns False when t is unreachable (the empty set is already a cut).
    """
    require_non_adjacent(graph, s, t)
    convention = default_occupancy(strict)
    walk = find_walk(graph, s, t, strict)
    if walk is None:
        return False
    candidates = set(walk_to_path(walk).temporal_vertices(convention))
    while candidates:
        x = min(candidates, key=lambda c: (c.vertex, c.time))
        res = verify_cut(graph, s, t, [x], strict)
        if res.is_cut:
            return x
        candidates &= res.witness.temporal_vertices(convention)
    return None


def has_two_disjoint_paths(graph: TemporalGraph, s: str, t: str, strict: bool = False) -> bool:
    """tp(s,t) >= 2, decided as: t reachable and no single temporal vertex is a cut."""
    return singleton_cut(graph, s, t, strict) is None
