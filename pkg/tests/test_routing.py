import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import brute_force_tours, brute_force_walk_length, connected_graphs
from tspsynth.graph import DisconnectedGraphError, Walk, build_supergraph
from tspsynth.presets import complete, cycle, lnn, star, sun16
from tspsynth.routing import (
    ExactRouterInfeasible,
    TspTour,
    alpha_expand,
    covering_walk_length_bounds,
    shortest_covering_walk,
    tour_weight,
    trim_covered_ends,
    tsp_cycle_exact,
    tsp_path_exact,
    tsp_path_exact_fixed_start,
    two_opt_cycle,
    two_opt_path,
)


def test_exact_path_examples():
    t = tsp_path_exact(build_supergraph(lnn(5)))
    assert t.order == (0, 1, 2, 3, 4) and t.weight == 4
    assert tsp_path_exact(build_supergraph(star(4))).weight == 4
    single = tsp_path_exact(build_supergraph(star(4)), active=[2])
    assert single.order == (2,) and single.weight == 0


def test_exact_path_prefers_lexicographically_smallest():
    # star-4 optimal paths all start on a leaf; smallest is (1, 0, 2, 3)
    assert tsp_path_exact(build_supergraph(star(4))).order == (1, 0, 2, 3)


def test_fixed_start_examples():
    s = build_supergraph(lnn(5))
    assert tsp_path_exact_fixed_start(s, None, 0).weight == 4
    t = tsp_path_exact_fixed_start(s, None, 2)
    assert t.weight == 6 and t.order[0] == 2
    assert tsp_path_exact_fixed_start(build_supergraph(star(4)), None, 0).weight == 5
    with pytest.raises(ValueError):
        tsp_path_exact_fixed_start(s, [0, 1], 3)


def test_exact_cycle_examples():
    assert tsp_cycle_exact(build_supergraph(complete(3))).weight == 3
    assert tsp_cycle_exact(build_supergraph(lnn(4))).weight == 6
    assert tsp_cycle_exact(build_supergraph(lnn(5)), active=[0, 3]).weight == 6


def test_exact_cap():
    s = build_supergraph(lnn(6))
    with pytest.raises(ExactRouterInfeasible, match="two_opt"):
        tsp_path_exact(s, cap=5)
    with pytest.raises(ExactRouterInfeasible):
        shortest_covering_walk(lnn(21))


def test_two_opt_examples():
    assert two_opt_cycle(build_supergraph(complete(4))).weight == 4
    assert two_opt_cycle(build_supergraph(complete(4))).improvements == 0
    assert two_opt_cycle(build_supergraph(lnn(4))).weight == 6
    assert two_opt_path(build_supergraph(lnn(5)), start=0).weight == 4
    assert two_opt_path(build_supergraph(star(4))).weight == 4


def test_two_opt_path_sun16_within_twice_exact():
    s = build_supergraph(sun16())
    exact, heur = tsp_path_exact(s), two_opt_path(s)
    print(f"sun16 path weights: exact {exact.weight}, two_opt {heur.weight}")
    assert exact.weight <= heur.weight <= 2 * exact.weight


def test_alpha_expand_examples():
    g = star(4)
    s = build_supergraph(g)
    walk = alpha_expand(TspTour((1, 0, 2, 3), "path", 4), s.tables)
    assert walk.vertices == (1, 0, 2, 0, 3)
    assert alpha_expand(TspTour((0, 1, 2, 3, 4), "path", 4), build_supergraph(lnn(5)).tables).vertices == (0, 1, 2, 3, 4)
    assert alpha_expand(TspTour((3,), "path", 0), s.tables).vertices == (3,)
    closed = alpha_expand(tsp_cycle_exact(s), s.tables)
    assert closed.closed and closed[0] == closed[-1]


def test_covering_walk_examples():
    assert len(shortest_covering_walk(cycle(4))) == 4
    assert len(shortest_covering_walk(star(4))) == 5
    assert shortest_covering_walk(lnn(5), start=2).vertices[0] == 2
    with pytest.raises(DisconnectedGraphError):
        shortest_covering_walk(lnn(5), active=[0, 2])
    with pytest.raises(ValueError):
        shortest_covering_walk(lnn(3), router="greedy")


def test_trim_covered_ends():
    assert trim_covered_ends((0, 1, 2, 1)) == (0, 1, 2)
    assert trim_covered_ends((1, 0, 1, 2)) == (0, 1, 2)
    assert trim_covered_ends((1, 0, 1, 2), keep_start=True) == (1, 0, 1, 2)
    assert trim_covered_ends((4,)) == (4,)


@settings(max_examples=60, deadline=None)
@given(connected_graphs(max_n=7))
def test_exact_tours_match_enumeration(g):
    s = build_supergraph(g)
    w = np.asarray(s.weight)
    assert tsp_path_exact(s).weight == brute_force_tours(w, closed=False)[0]
    assert tsp_cycle_exact(s).weight == brute_force_tours(w, closed=True)[0]
    for v in range(g.n):
        t = tsp_path_exact_fixed_start(s, None, v)
        assert t.order[0] == v
        assert t.weight == brute_force_tours(w, closed=False, start=v)[0]


@settings(max_examples=60, deadline=None)
@given(connected_graphs(max_n=7), st.sampled_from(["exact", "two_opt"]))
def test_covering_walk_properties(g, router):
    for closed in (False, True):
        walk = shortest_covering_walk(g, closed=closed, router=router)
        assert walk.is_valid_in(g) and walk.covers(range(g.n))
        lo, hi = covering_walk_length_bounds(g.n, closed)
        if router == "exact":
            assert len(walk) == brute_force_walk_length(g, closed=closed)
            assert lo <= len(walk) <= hi
    for v in range(g.n):
        walk = shortest_covering_walk(g, start=v, router=router)
        assert walk[0] == v and walk.covers(range(g.n))
        if router == "exact":
            assert len(walk) == brute_force_walk_length(g, start=v)
    # the final vertex of an open walk occurs once, so deleting it keeps the rest connected
    walk = shortest_covering_walk(g, router=router)
    assert walk[-1] not in walk.vertices[:-1]


@settings(max_examples=40, deadline=None)
@given(connected_graphs(min_n=3, max_n=8))
def test_covering_walk_on_active_subsets_avoids_inactive(g):
    # drop a vertex whose removal keeps the graph connected
    for drop in range(g.n):
        try:
            sub_walk = shortest_covering_walk(g, active=[v for v in range(g.n) if v != drop])
        except DisconnectedGraphError:
            continue
        assert drop not in sub_walk.vertices
        assert sub_walk.is_valid_in(g)


def _locally_optimal(w, order, closed):
    n = len(order)
    for k in range(n - 1 if closed else n - 2):
        for j in range(k + 1, n):
            a, b, c = order[k], order[k + 1], order[j]
            if closed or j + 1 < n:
                d = order[(j + 1) % n]
                if w[a][b] + w[c][d] > w[a][c] + w[b][d]:
                    return False
            elif w[a][b] > w[a][c]:
                return False
    return True


@settings(max_examples=60, deadline=None)
@given(connected_graphs(max_n=9))
def test_two_opt_local_optimality_and_termination(g):
    s = build_supergraph(g)
    w = s.weight.tolist()
    c = two_opt_cycle(s)
    assert sorted(c.order) == list(range(g.n))
    assert c.weight == tour_weight(w, c.order, True)
    assert _locally_optimal(w, c.order, True)
    assert c.improvements <= g.n**2
    for v in range(g.n):
        p = two_opt_path(s, start=v)
        assert p.order[0] == v and _locally_optimal(w, p.order, False)
        assert p.improvements <= g.n**2
