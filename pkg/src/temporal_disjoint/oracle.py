"""Brute-force ground truth for small instances.

Everything here is exponential and meant for graphs with roughly ten
vertices and a handful of timesteps.  The exact parameters are computed by
set packing (max disjoint family) and hitting set (min cut) over the
occupancy sets of the enumerated paths or walks.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .core import (
    Occupancy,
    TemporalGraph,
    TemporalGraphError,
    TemporalPath,
    TemporalVertex,
    default_occupancy,
    require_vertices,
)
from .reachability import latest_departure

DEFAULT_MAX_PATHS = 20_000
DEFAULT_MAX_WALKS = 200_000


class CapExceeded(TemporalGraphError):
    pass


@dataclass
class PathCatalog:
    graph: TemporalGraph
    s: str
    t: str
    strict: bool
    paths: list[TemporalPath] = field(default_factory=list)
    exceeded: bool = False

    def __len__(self) -> int:
        return len(self.paths)

    def occupancies(self, convention: Occupancy | None = None) -> list[frozenset[TemporalVertex]]:
        return [p.temporal_vertices(convention) for p in self.paths]

    def require_complete(self) -> None:
        if self.exceeded:
            raise CapExceeded("path enumeration hit its cap; exact values unavailable")


def _out_arcs(graph: TemporalGraph) -> dict[str, list[tuple[int, str]]]:
    out: dict[str, list[tuple[int, str]]] = {v: [] for v in graph.vertices}
    for time, arcs in graph.arcs_by_time.items():
        for u, v in arcs:
            out[u].append((time, v))
    for v in out:
        out[v].sort()
    return out


def enumerate_paths(
    graph: TemporalGraph,
    s: str,
    t: str,
    strict: bool = False,
    max_paths: int = DEFAULT_MAX_PATHS,
    max_length: int | None = None,
) -> PathCatalog:
    """All temporal s,t-paths, by depth-first search over (vertex, arrival time)."""
    require_vertices(graph, s, t)
    catalog = PathCatalog(graph, s, t, strict)
    if s == t:
        return catalog
    out = _out_arcs(graph)
    max_length = graph.n if max_length is None else max_length
    vertices = [s]
    times: list[int] = []
    on_path = {s}

    def dfs(v: str, arrived: int) -> bool:
        for time, w in out[v]:
            if time < arrived or (strict and time == arrived) or w in on_path:
                continue
            if w == t:
                if len(catalog.paths) >= max_paths:
                    catalog.exceeded = True
                    return False
                catalog.paths.append(TemporalPath(tuple(vertices) + (t,), tuple(times) + (time,), strict))
                continue
            if len(times) + 1 >= max_length:
                catalog.exceeded = True
                continue
            vertices.append(w)
            times.append(time)
            on_path.add(w)
            ok = dfs(w, time)
            on_path.discard(w)
            times.pop()
            vertices.pop()
            if not ok:
                return False
        return True

    dfs(s, 0)
    return catalog


def enumerate_walk_occupancies(
    graph: TemporalGraph,
    s: str,
    t: str,
    strict: bool = False,
    max_walks: int = DEFAULT_MAX_WALKS,
) -> list[frozenset[TemporalVertex]]:
    """Inclusion-minimal occupancy sets of temporal s,t-walks.

    Walks are explored as sequences of held temporal vertices (wait one
    step, or cross an edge).  Continuing from a state that can already step
    onto ``t`` only produces supersets, so the search stops there.  Strict
    walks use half-open occupancy.
    """
    require_vertices(graph, s, t)
    out = _out_arcs(graph)
    tau = graph.lifetime
    shift = 1 if strict else 0
    depart = latest_departure(graph, t, strict)
    found: set[frozenset[TemporalVertex]] = set()
    held: list[TemporalVertex] = []
    held_set: set[TemporalVertex] = set()
    budget = [max_walks]

    def alive(v: str, j: int) -> bool:
        return depart.get(v, -1) >= j

    def dfs(v: str, j: int) -> None:
        if budget[0] <= 0:
            raise CapExceeded("walk enumeration hit its cap")
        nxt = []
        for time, w in out[v]:
            if time != j:
                continue
            if w == t:
                budget[0] -= 1
                found.add(frozenset(held))
                return
            if w != s:
                nxt.append((w, j + shift))
        if j < tau:
            nxt.append((v, j + 1))
        for w, k in nxt:
            state = TemporalVertex(w, k)
            if k > tau or state in held_set or not alive(w, k):
                continue
            held.append(state)
            held_set.add(state)
            dfs(w, k)
            held_set.discard(state)
            held.pop()

    for time, w in out[s]:
        if w == t:
            found.add(frozenset())
            continue
        k = time + shift
        if w == s or k > tau or not alive(w, k):
            continue
        state = TemporalVertex(w, k)
        held.append(state)
        held_set.add(state)
        dfs(w, k)
        held_set.discard(state)
        held.pop()
    return minimal_sets(found)


def minimal_sets(sets: Iterable[frozenset]) -> list[frozenset]:
    ordered = sorted(set(sets), key=len)
    keep: list[frozenset] = []
    for x in ordered:
        if not any(k <= x for k in keep):
            keep.append(x)
    return keep


# ---------------------------------------------------------------------------
# exact set packing / hitting set


def _components(sets: list[frozenset]) -> list[list[frozenset]]:
    parent: dict = {}

    def find(x):
        while parent[x] is not x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for st in sets:
        items = list(st)
        for x in items:
            parent.setdefault(x, x)
        for x in items[1:]:
            a, b = find(items[0]), find(x)
            if a is not b:
                parent[a] = b
    groups: dict = {}
    for st in sets:
        groups.setdefault(find(next(iter(st))), []).append(st)
    return list(groups.values())


def max_disjoint_family(sets: Iterable[frozenset]) -> list[frozenset]:
    """A largest subfamily of pairwise disjoint sets (empty sets always fit)."""
    sets = list(sets)
    empties = [x for x in sets if not x]
    nonempty = minimal_sets(x for x in sets if x)
    chosen = list(empties)
    for comp in _components(nonempty):
        chosen.extend(_pack_component(comp))
    return chosen


def _pack_component(sets: list[frozenset]) -> list[frozenset]:
    universe = sorted({x for st in sets for x in st}, key=repr)
    bit = {x: 1 << i for i, x in enumerate(universe)}
    masks = []
    for st in sets:
        m = 0
        for x in st:
            m |= bit[x]
        masks.append(m)
    # each set is keyed by its rarest element; sets sharing a key conflict
    freq = {}
    for m in masks:
        b = m
        while b:
            low = b & -b
            freq[low] = freq.get(low, 0) + 1
            b ^= low
    cands = []
    for i, m in enumerate(masks):
        b, key, best = m, 0, None
        while b:
            low = b & -b
            if best is None or freq[low] < best:
                best, key = freq[low], low
            b ^= low
        cands.append((m, key, i))
    best: list = [[]]

    def rec(cands, chosen):
        keys: dict[int, list] = {}
        for c in cands:
            keys.setdefault(c[1], []).append(c)
        if len(chosen) + len(keys) <= len(best[0]):
            return
        if not cands:
            best[0] = list(chosen)
            return
        key = min(keys, key=lambda k: (len(keys[k]), k))
        for c in keys[key]:
            rest = [d for d in cands if d[1] != key and not (d[0] & c[0])]
            chosen.append(c)
            rec(rest, chosen)
            chosen.pop()
        rec([d for d in cands if d[1] != key], chosen)

    rec(cands, [])
    return [sets[c[2]] for c in best[0]]


def min_hitting_set(sets: Iterable[frozenset]) -> frozenset | None:
    """A smallest set of elements meeting every set; None if some set is empty."""
    sets = minimal_sets(sets)
    if any(not x for x in sets):
        return None
    out: set = set()
    for comp in _components(sets):
        out |= _hit_component(comp)
    return frozenset(out)


def _hit_component(sets: list[frozenset]) -> set:
    def greedy_packing(sets):
        used: set = set()
        count = 0
        for st in sorted(sets, key=len):
            if used.isdisjoint(st):
                used |= st
                count += 1
        return count

    def search(sets, k):
        if not sets:
            return set()
        if k == 0 or greedy_packing(sets) > k:
            return None
        pivot = min(sets, key=len)
        for x in sorted(pivot, key=repr):
            sub = search([st for st in sets if x not in st], k - 1)
            if sub is not None:
                sub.add(x)
                return sub
        return None

    k = greedy_packing(sets)
    while True:
        found = search(sets, k)
        if found is not None:
            return found
        k += 1


# ---------------------------------------------------------------------------
# the parameters


def tp_exact(catalog: PathCatalog, convention: Occupancy | None = None) -> int:
    return len(max_disjoint_paths(catalog, convention))


def max_disjoint_paths(catalog: PathCatalog, convention: Occupancy | None = None) -> list[TemporalPath]:
    catalog.require_complete()
    convention = convention or default_occupancy(catalog.strict)
    by_occ: dict[frozenset, TemporalPath] = {}
    loose = []
    for p in catalog.paths:
        occ = p.temporal_vertices(convention)
        if not occ:
            loose.append(p)
        else:
            by_occ.setdefault(occ, p)
    family = max_disjoint_family(by_occ)
    return loose + [by_occ[x] for x in family]


def tpc_exact(catalog: PathCatalog, convention: Occupancy | None = None) -> int:
    cut = min_path_cut(catalog, convention)
    if cut is None:
        raise TemporalGraphError("no finite cut: source and target are adjacent")
    return len(cut)


def min_path_cut(catalog: PathCatalog, convention: Occupancy | None = None) -> frozenset[TemporalVertex] | None:
    catalog.require_complete()
    convention = convention or default_occupancy(catalog.strict)
    return min_hitting_set(catalog.occupancies(convention))


def p_exact(catalog: PathCatalog) -> int:
    catalog.require_complete()
    sets = [p.internal_vertices() for p in catalog.paths]
    return len(max_disjoint_family(sets))


def c_exact(catalog: PathCatalog) -> int:
    catalog.require_complete()
    cut = min_hitting_set([p.internal_vertices() for p in catalog.paths])
    if cut is None:
        raise TemporalGraphError("no finite cut: source and target are adjacent")
    return len(cut)


def tw_exact(graph: TemporalGraph, s: str, t: str, strict: bool = False, max_walks: int = DEFAULT_MAX_WALKS) -> int:
    return len(max_disjoint_family(enumerate_walk_occupancies(graph, s, t, strict, max_walks)))


def tc_exact(graph: TemporalGraph, s: str, t: str, strict: bool = False, max_walks: int = DEFAULT_MAX_WALKS) -> int:
    cut = min_hitting_set(enumerate_walk_occupancies(graph, s, t, strict, max_walks))
    if cut is None:
        raise TemporalGraphError("no finite cut: source and target are adjacent")
    return len(cut)


def all_parameters(graph: TemporalGraph, s: str, t: str, strict: bool = False, convention: Occupancy | None = None) -> dict[str, int]:
    catalog = enumerate_paths(graph, s, t, strict)
    return {
        "tp": tp_exact(catalog, convention),
        "tpc": tpc_exact(catalog, convention),
        "tw": tw_exact(graph, s, t, strict),
        "tc": tc_exact(graph, s, t, strict),
        "p": p_exact(catalog),
        "c": c_exact(catalog),
    }
