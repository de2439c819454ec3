import numpy as np
import pytest
from hypothesis import given, settings

from conftest import connected_graphs, floyd_warshall
from tspsynth.graph import (
    NULL,
    CouplingGraph,
    DisconnectedGraphError,
    GraphError,
    Walk,
    build_supergraph,
    format_graph_text,
    get_path,
    parse_graph_text,
    shortest_paths,
)
from tspsynth.presets import lnn, star


def test_parse_graph_text_with_comments():
    g = parse_graph_text("# a triangle\n3 3\n0 1\n1 2  # last\n0 2\n")
    assert g.n == 3 and g.edges == ((0, 1), (0, 2), (1, 2))
    assert g.neighbors(0) == (1, 2)


@pytest.mark.parametrize(
    "text",
    ["", "3 2\n0 1\n", "2 1\n0 0\n", "2 1\n0 5\n", "3 3\n0 1\n1 0\n1 2\n", "2 1\n0 x\n"],
)
def test_parse_graph_text_rejects_malformed(text):
    with pytest.raises(GraphError):
        parse_graph_text(text)


def test_disconnected_graph_names_a_vertex():
    with pytest.raises(DisconnectedGraphError) as exc:
        CouplingGraph.from_edges(4, [(0, 1), (2, 3)])
    assert exc.value.pair[1] in (2, 3)


def test_induced_subgraph_disconnection_uses_original_labels():
    g = lnn(5)
    with pytest.raises(DisconnectedGraphError) as exc:
        g.induced([0, 1, 3, 4])
    assert "3" in str(exc.value)
    sub, labels = g.induced([4, 2, 3])
    assert labels == (2, 3, 4) and sub.edges == ((0, 1), (1, 2))


def test_format_round_trip():
    g = star(5)
    assert parse_graph_text(format_graph_text(g)) == g


def test_lnn5_distances():
    t = shortest_paths(lnn(5))
    assert t.W[0, 4] == 4 and t.W[3, 1] == 2
    assert t.A[0, 0] == NULL
    assert get_path(t, 0, 4) == (0, 1, 2, 3, 4)
    assert get_path(t, 2, 2) == (2,)


def test_star_paths_go_through_centre():
    t = shortest_paths(star(4))
    assert get_path(t, 1, 3) == (1, 0, 3)


def test_tables_are_read_only():
    t = shortest_paths(lnn(3))
    with pytest.raises(ValueError):
        t.W[0, 1] = 7


@settings(max_examples=60, deadline=None)
@given(connected_graphs(max_n=9))
def test_bfs_matches_floyd_warshall(g):
    t = shortest_paths(g)
    assert np.array_equal(t.W, floyd_warshall(g))
    for v in range(g.n):
        for u in range(g.n):
            path = get_path(t, v, u)
            assert path[0] == v and path[-1] == u
            assert len(path) == t.W[v, u] + 1
            assert Walk(path).is_valid_in(g)


@settings(max_examples=40, deadline=None)
@given(connected_graphs(max_n=9))
def test_supergraph_is_metric(g):
    w = build_supergraph(g).weight
    assert np.array_equal(w, w.T)
    n = g.n
    for a in range(n):
        for b in range(n):
            assert (w[a, b] <= w[a, :] + w[:, b]).all()


def test_walk_helpers():
    w = Walk((1, 0, 2, 0, 3))
    assert w.stay_count == 1
    assert w.reversed().vertices == (3, 0, 2, 0, 1)
    assert w.covers(range(4)) and not w.covers([5])
    assert w.is_valid_in(star(4))
    with pytest.raises(ValueError):
        Walk((0, 1), closed=True)
