import itertools

import pytest
from hypothesis import given, settings, strategies as st

from temporal_disjoint.core import AdjacentTerminalsError, TemporalGraph, TemporalGraphError, are_t_vertex_disjoint
from temporal_disjoint.expansion import StaticExpansion, build_expansion, max_flow_unit_vertex, walks_menger
from temporal_disjoint.generators import k_copies, named_example
from temporal_disjoint.oracle import enumerate_paths, tc_exact, tp_exact, tw_exact
from temporal_disjoint.reachability import reaches

from conftest import small_instances


def test_fig1_expansion_size(fig1):
    g, s, t = fig1
    exp = build_expansion(g, s, t)
    assert exp.num_nodes == 3 * 3 + 2
    # waiting arcs: 3 vertices x 2; crossing arcs never go back in time
    assert sum(1 for a in exp.arcs if a[2] is None) == 6
    for a, b, e in exp.arcs:
        if a > 1 and b > 1:
            assert exp.nodes[b].time >= exp.nodes[a].time


def test_directed_crossing_arcs_follow_orientation():
    g = TemporalGraph([("s", "a", [1]), ("a", "t", [2])], directed=True)
    exp = build_expansion(g, "s", "t")
    crossing = [e for _, _, e in exp.arcs if e is not None]
    assert [(e.tail, e.head) for e in crossing] == [("s", "a"), ("a", "t")]


def test_single_route():
    g = TemporalGraph([("s", "u", [1]), ("u", "t", [1])])
    res = walks_menger(g, "s", "t")
    assert res.value == 1 and set(res.cut) == {("u", 1)}


def test_source_equals_target_rejected(fig1):
    g, _, _ = fig1
    with pytest.raises(TemporalGraphError):
        build_expansion(g, "s", "s")


def test_adjacent_rejected():
    g = TemporalGraph([("s", "t", [1])])
    with pytest.raises(AdjacentTerminalsError):
        walks_menger(g, "s", "t")


def test_no_walk_gives_zero():
    g = TemporalGraph([("s", "u", [2]), ("u", "t", [1])])
    res = walks_menger(g, "s", "t")
    assert res.value == 0 and res.cut == frozenset() and res.walks == []


def test_fig2_matches_oracle(fig2):
    g, s, t = fig2
    res = walks_menger(g, s, t)
    assert res.value == tw_exact(g, s, t) == tc_exact(g, s, t) == 3


@pytest.mark.parametrize("k", [1, 2])
def test_kcopies_walks(k):
    g, s, t = k_copies(k, "fig2")
    assert walks_menger(g, s, t).value >= 2 * k


def _brute_node_disjoint(exp: StaticExpansion) -> int:
    succ = exp.successors()
    routes = []

    def dfs(x, seen):
        if x == 1:
            routes.append(frozenset(seen - {0, 1}))
            return
        for y in succ[x]:
            if y not in seen:
                dfs(y, seen | {y})

    dfs(0, {0})
    best = 0
    for r in range(1, len(routes) + 1):
        if any(all(a.isdisjoint(b) for a, b in itertools.combinations(c, 2)) for c in itertools.combinations(routes, r)):
            best = r
        else:
            break
    return best


def test_flow_matches_brute_force_on_tiny_expansions():
    checked = 0
    for g, s, t in small_instances(60, seed0=500, max_n=5, max_tau=2):
        exp = build_expansion(g, s, t)
        if exp.num_nodes > 10:
            continue
        assert max_flow_unit_vertex(exp).value == _brute_node_disjoint(exp)
        checked += 1
    assert checked > 10


def test_two_routes_value_two():
    g = TemporalGraph([("s", "a", [1]), ("a", "t", [1]), ("s", "b", [1]), ("b", "t", [1])])
    assert walks_menger(g, "s", "t").value == 2


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 10**6), strict=st.booleans())
def test_flow_invariants(seed, strict):
    g, s, t = small_instances(1, seed0=seed)[0]
    res = walks_menger(g, s, t, strict)
    assert res.value == len(res.walks) == len(res.cut)
    for w in res.walks:
        assert w.is_valid_in(g) and (w.source, w.target) == (s, t)
    for a, b in itertools.combinations(res.walks, 2):
        assert are_t_vertex_disjoint(a, b)
    assert walks_menger(g, s, t, strict, removed=res.cut).value == 0
    assert res.value >= tp_exact(enumerate_paths(g, s, t, strict))
    if res.value == 0:
        assert not reaches(g, s, t, strict)
