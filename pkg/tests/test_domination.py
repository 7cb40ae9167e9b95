import itertools

import networkx as nx
import pytest
from hypothesis import given, settings

from pathlength.domination import (
    DominatingPath,
    InvalidPathError,
    best_dominating_shortest_path,
    branch_sets,
    check_dominating_path,
    double_bfs_dominating_path,
    is_dominating_pair,
    min_dominating_pair,
    path_domination_radius,
    shortest_path,
)
from pathlength.generators import FamilySpec, generate

from strategies import connected_graphs

C6 = generate(FamilySpec("cycle", 6))
P5 = generate(FamilySpec("path", 5))
K4 = generate(FamilySpec("clique", 4))
STAR = generate(FamilySpec("star", 4))


def test_double_bfs_examples():
    assert double_bfs_dominating_path(C6) == DominatingPath((3, 2, 1, 0), 1)
    assert double_bfs_dominating_path(P5) == DominatingPath((4, 3, 2, 1, 0), 0)
    p = double_bfs_dominating_path(K4)
    assert len(p.vertices) == 2 and p.radius == 1


def test_best_path_examples():
    assert best_dominating_shortest_path(C6).radius == 1
    p = best_dominating_shortest_path(STAR)
    # the first pair (0, 1) already reaches radius 1 through the center
    assert p == DominatingPath((0, 1), 1)
    assert best_dominating_shortest_path(P5).radius == 0


def test_radius_examples():
    assert path_domination_radius(C6, [0, 1, 2, 3]) == 1
    assert path_domination_radius(C6, [0]) == 3
    assert path_domination_radius(P5, range(5)) == 0


def test_min_pair_examples():
    assert min_dominating_pair(P5).certificate() == {"pair": [0, 4], "k": 0}
    assert min_dominating_pair(C6).certificate() == {"pair": [0, 3], "k": 1}
    assert min_dominating_pair(K4).certificate() == {"pair": [0, 1], "k": 1}


def test_check_path_rejects_bad_input():
    with pytest.raises(InvalidPathError):
        check_dominating_path(C6, DominatingPath((0, 2), 2))
    with pytest.raises(InvalidPathError):
        check_dominating_path(C6, DominatingPath((0, 1, 2, 3, 4), 1))
    with pytest.raises(InvalidPathError):
        check_dominating_path(C6, DominatingPath((0, 1, 2, 3), 2))


def test_shortest_path_uses_smallest_predecessor():
    # both 1 and 3 are predecessors of 2 on the way from 0 in C4
    c4 = generate(FamilySpec("cycle", 4))
    assert shortest_path(c4, 0, 2) == [0, 1, 2]


def _brute_force_pair(g, x, y, k):
    """Every simple x,y-path is k-dominating."""
    h = nx.Graph(list(g.edges))
    return all(path_domination_radius(g, p) <= k for p in nx.all_simple_paths(h, x, y))


@settings(max_examples=40, deadline=None)
@given(connected_graphs(max_n=7))
def test_pair_test_matches_path_enumeration(g):
    for k in range(0, 3):
        for x, y in itertools.combinations(range(g.n), 2):
            assert is_dominating_pair(g, x, y, k) == _brute_force_pair(g, x, y, k)


@settings(max_examples=60, deadline=None)
@given(connected_graphs())
def test_paths_are_consistent(g):
    for p in (double_bfs_dominating_path(g), best_dominating_shortest_path(g)):
        check_dominating_path(g, p)
    assert best_dominating_shortest_path(g).radius <= double_bfs_dominating_path(g).radius


@settings(max_examples=60, deadline=None)
@given(connected_graphs())
def test_min_pair_is_minimal(g):
    pair = min_dominating_pair(g)
    assert pair.x < pair.y
    assert is_dominating_pair(g, pair.x, pair.y, pair.k)
    if pair.k > 0:
        assert not any(
            is_dominating_pair(g, x, y, pair.k - 1) for x, y in itertools.combinations(range(g.n), 2)
        )


@settings(max_examples=60, deadline=None)
@given(connected_graphs())
def test_branch_sets_partition_and_are_connected(g):
    p = best_dominating_shortest_path(g)
    sets = branch_sets(g, p.vertices)
    assert sorted(v for s in sets for v in s) == list(range(g.n))
    h = nx.Graph(list(g.edges))
    for root, s in zip(p.vertices, sets):
        assert root in s
        assert nx.is_connected(h.subgraph(s))
        assert all(g.dist[root][v] <= p.radius for v in s)
