import random

import pytest
from hypothesis import given, settings, strategies as st

from temporal_disjoint.core import AdjacentTerminalsError, TemporalGraph, TemporalGraphError, TemporalVertex, hits_cut, parse_path
from temporal_disjoint.cuts import (
    find_min_cut,
    has_two_disjoint_paths,
    singleton_cut,
    verify_cut,
    window_assignments,
    windows,
)
from temporal_disjoint.generators import k_copies, named_example
from temporal_disjoint.oracle import enumerate_paths, min_path_cut, tp_exact, tpc_exact

from conftest import small_instances


def test_windows():
    assert windows([2, 4], 6) == [(1, 1), (3, 3), (5, 6)]
    assert windows([1], 3) == [(2, 3)]
    assert windows([1, 2, 3], 3) == []
    assert windows([2, 3], 3) == [(1, 1)]


def test_window_assignment_count():
    cut = [TemporalVertex("a", 2), TemporalVertex("a", 4), TemporalVertex("b", 1)]
    assert len(list(window_assignments(cut, 6))) == 3 * 1


def test_fig2_cut_examples(fig2):
    g, s, t = fig2
    assert verify_cut(g, s, t, [("x", 1), ("x", 2), ("y", 1)]).is_cut
    r = verify_cut(g, s, t, [("x", 2), ("y", 2)])
    assert r.witness == parse_path("s -(1)- y -(1)- u -(3)- x -(3)- t")
    r = verify_cut(g, s, t, [("x", 2), ("y", 1)])
    assert r.witness == parse_path("s -(1)- x -(1)- u -(2)- y -(2)- t")


def test_empty_set_is_not_a_cut(fig2):
    g, s, t = fig2
    r = verify_cut(g, s, t, [])
    assert not r and r.witness.is_valid_in(g)


def test_cut_errors(fig2):
    g, s, t = fig2
    with pytest.raises(TemporalGraphError):
        verify_cut(g, s, t, [("s", 1)])
    with pytest.raises(AdjacentTerminalsError):
        verify_cut(g, "s", "x", [])


def test_vertex_blocked_at_every_time():
    g = TemporalGraph([("s", "a", [1, 2]), ("a", "t", [1, 2])])
    assert verify_cut(g, "s", "t", [("a", 1), ("a", 2)]).is_cut


def test_min_cut_examples():
    g, s, t = named_example("fig2")
    assert find_min_cut(g, s, t, 5).size == 3
    g, s, t = named_example("fig1")
    r = find_min_cut(g, s, t, 3)
    assert r.size == 1 and r.cut == {("u", 2)}
    g, s, t = k_copies(2, "fig2")
    assert find_min_cut(g, s, t, 6).size == 6


def test_min_cut_bound_exceeded(fig2):
    g, s, t = fig2
    r = find_min_cut(g, s, t, 2)
    assert r.exceeded and r.size is None


def test_min_cut_unreachable():
    g = TemporalGraph([("s", "u", [2]), ("u", "t", [1])])
    assert find_min_cut(g, "s", "t", 2).size == 0


def test_has_two_examples(fig1, fig2):
    assert has_two_disjoint_paths(*fig2)
    assert not has_two_disjoint_paths(*fig1)
    assert singleton_cut(*fig1) == ("u", 2)
    g = TemporalGraph([("s", "u", [2]), ("u", "t", [1])])
    assert not has_two_disjoint_paths(g, "s", "t")


def test_verify_cut_agrees_with_oracle():
    rng = random.Random(7)
    for g, s, t in small_instances(80, seed0=1000):
        for strict in (False, True):
            catalog = enumerate_paths(g, s, t, strict)
            universe = [TemporalVertex(v, i) for v in g.vertices if v not in (s, t) for i in range(1, g.lifetime + 1)]
            cand = rng.sample(universe, min(len(universe), rng.randint(0, 4)))
            r = verify_cut(g, s, t, cand, strict)
            expected = all(hits_cut(p, cand) for p in catalog.paths)
            assert r.is_cut == expected
            if not r.is_cut:
                assert r.witness.is_valid_in(g) and not hits_cut(r.witness, cand)


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 10**6))
def test_cut_monotone(seed):
    rng = random.Random(seed)
    g, s, t = small_instances(1, seed0=seed)[0]
    universe = [TemporalVertex(v, i) for v in g.vertices if v not in (s, t) for i in range(1, g.lifetime + 1)]
    small = set(rng.sample(universe, min(2, len(universe))))
    big = small | set(rng.sample(universe, min(2, len(universe))))
    if verify_cut(g, s, t, small).is_cut:
        assert verify_cut(g, s, t, big).is_cut


def test_min_cut_matches_oracle():
    for g, s, t in small_instances(60, seed0=2000):
        for strict in (False, True):
            catalog = enumerate_paths(g, s, t, strict)
            expected = tpc_exact(catalog)
            r = find_min_cut(g, s, t, expected, strict)
            assert r.size == expected
            assert verify_cut(g, s, t, r.cut, strict).is_cut
            assert has_two_disjoint_paths(g, s, t, strict) == (tp_exact(catalog) >= 2)


def test_min_cut_is_lexicographically_first():
    g, s, t = named_example("fig1")
    oracle_cut = min_path_cut(enumerate_paths(g, s, t))
    assert find_min_cut(g, s, t, 2).cut == oracle_cut
