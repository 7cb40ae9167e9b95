import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pathlength.generators import FamilySpec, generate
from pathlength.graph import (
    DisconnectedGraphError,
    GraphError,
    all_pairs_distances,
    bfs_layering,
    build_graph,
    disk_intercepts,
    graph_power,
)

from strategies import connected_graphs


def cycle(n):
    return generate(FamilySpec("cycle", n))


def path(n):
    return generate(FamilySpec("path", n))


def clique(n):
    return generate(FamilySpec("clique", n))


def test_build_triangle():
    g = build_graph([(0, 1), (1, 2), (0, 2)], 3)
    assert g.edges == ((0, 1), (0, 2), (1, 2))
    assert g.adjacency == ((1, 2), (0, 2), (0, 1))


def test_build_six_cycle():
    g = build_graph([(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)], 6)
    assert g.m == 6 and all(len(a) == 2 for a in g.adjacency)


def test_duplicate_edges_collapse():
    assert build_graph([(0, 1), (1, 0), (0, 1)], 2).m == 1


@pytest.mark.parametrize(
    "edges,n,error",
    [
        ([(0, 1), (2, 3)], 4, DisconnectedGraphError),
        ([(0, 5)], 3, GraphError),
        ([(0, 0), (0, 1)], 2, GraphError),
        ([], 1, GraphError),
    ],
)
def test_build_rejects(edges, n, error):
    with pytest.raises(error):
        build_graph(edges, n)


def test_distances_examples():
    assert cycle(6).dist[0][3] == 3
    assert all(cycle(6).dist[u][v] == min(abs(u - v), 6 - abs(u - v)) for u in range(6) for v in range(6))
    k4 = clique(4).dist
    assert all(k4[u][v] == (u != v) for u in range(4) for v in range(4))
    assert path(5).dist[0][4] == 4
    assert all_pairs_distances(path(5)) == path(5).dist


def test_layering_examples():
    layers = lambda g, s: [set(x) for x in bfs_layering(g, s).layers]
    assert layers(cycle(6), 0) == [{0}, {1, 5}, {2, 4}, {3}]
    assert layers(clique(4), 0) == [{0}, {1, 2, 3}]
    assert layers(path(5), 2) == [{2}, {1, 3}, {0, 4}]


def test_power_examples():
    g = cycle(7)
    assert graph_power(g, 1) == g
    assert graph_power(clique(4), 3) == clique(4)
    # pairs of P5 at distance at most 2: four at distance 1, three at distance 2
    assert graph_power(path(5), 2).m == 7


def test_disk_intercepts_examples():
    assert disk_intercepts(path(5), 2, 1, 0, 4)
    assert not disk_intercepts(cycle(6), 1, 1, 3, 5)
    assert disk_intercepts(cycle(6), 1, 2, 0, 4)


@settings(max_examples=60, deadline=None)
@given(connected_graphs())
def test_distances_match_networkx(g):
    ref = dict(nx.all_pairs_shortest_path_length(nx.Graph(list(g.edges))))
    assert all(g.dist[u][v] == ref[u][v] for u in range(g.n) for v in range(g.n))


@settings(max_examples=60, deadline=None)
@given(connected_graphs(), st.data())
def test_layering_has_no_skip_edges(g, data):
    s = data.draw(st.integers(0, g.n - 1))
    lay = bfs_layering(g, s)
    assert lay.layers[0] == frozenset({s})
    assert sorted(v for layer in lay.layers for v in layer) == list(range(g.n))
    assert all(abs(lay.level[u] - lay.level[v]) <= 1 for u, v in g.edges)


@settings(max_examples=40, deadline=None)
@given(connected_graphs())
def test_powers_are_monotone_and_eventually_complete(g):
    for k in range(1, g.diameter + 1):
        assert set(graph_power(g, k).edges) <= set(graph_power(g, k + 1).edges)
    assert graph_power(g, g.diameter).m == g.n * (g.n - 1) // 2


@settings(max_examples=40, deadline=None)
@given(connected_graphs(), st.data())
def test_disk_intercepts_matches_networkx(g, data):
    c = data.draw(st.integers(0, g.n - 1))
    r = data.draw(st.integers(0, 2))
    u, w = data.draw(st.lists(st.integers(0, g.n - 1), min_size=2, max_size=2, unique=True))
    inside = {v for v in range(g.n) if g.dist[c][v] <= r}
    if u in inside or w in inside:
        expected = True
    else:
        h = nx.Graph(list(g.edges))
        h.remove_nodes_from(inside)
        expected = not nx.has_path(h, u, w)
    assert disk_intercepts(g, c, r, u, w) == expected
