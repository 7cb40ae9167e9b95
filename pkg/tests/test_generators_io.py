import warnings

import networkx as nx
import pytest
from hypothesis import given, settings

from pathlength.atfree import convex_bipartite_decomposition, permutation_graph, trapezoid_graph
from pathlength.generators import (
    FamilySpec,
    generate,
    random_convex_bipartite_model,
    random_interval_model,
    interval_graph,
    random_permutation_model,
    random_trapezoid_model,
)
from pathlength.graph import DisconnectedGraphError, GraphError
from pathlength.parsing import (
    ConvexBipartiteModel,
    DuplicateEdgeWarning,
    ParseError,
    parse_graph,
    parse_model,
    serialize_graph,
    serialize_model,
)

from strategies import connected_graphs


def test_family_examples():
    c6 = generate(FamilySpec("cycle", 6))
    assert c6.m == 6 and nx.is_isomorphic(nx.Graph(list(c6.edges)), nx.cycle_graph(6))
    cat = generate(FamilySpec("caterpillar", spine=3, hair=2))
    assert cat.n == 9 and nx.is_tree(nx.Graph(list(cat.edges)))
    co = generate(FamilySpec("complement-cycle", 6))
    assert co.m == 9
    assert nx.is_isomorphic(nx.Graph(list(co.edges)), nx.complement(nx.cycle_graph(6)))


def test_other_families():
    assert generate(FamilySpec("clique", 5)).m == 10
    assert generate(FamilySpec("path", 5)).edges == ((0, 1), (1, 2), (2, 3), (3, 4))
    assert generate(FamilySpec("star", 5)).adjacency[0] == (1, 2, 3, 4)


@pytest.mark.parametrize(
    "spec",
    [
        dict(kind="cycle", n=1),
        dict(kind="caterpillar", spine=0, hair=1),
        dict(kind="random-connected", n=5, p=0.0),
        dict(kind="hypercube", n=4),
    ],
)
def test_invalid_specs(spec):
    with pytest.raises(GraphError):
        FamilySpec(**spec)


def test_unsatisfiable_random_spec():
    with pytest.raises(GraphError):
        generate(FamilySpec("random-connected", n=30, p=0.001))


def test_random_generation_is_seed_deterministic():
    a = generate(FamilySpec("random-connected", n=8, p=0.3, seed=7))
    b = generate(FamilySpec("random-connected", n=8, p=0.3, seed=7))
    assert a == b
    assert random_permutation_model(20, 3) == random_permutation_model(20, 3)
    assert random_trapezoid_model(15, 3) == random_trapezoid_model(15, 3)


def test_random_models_are_connected():
    for seed in range(5):
        permutation_graph(random_permutation_model(40, seed))
        trapezoid_graph(random_trapezoid_model(40, seed))
        q, intervals = random_convex_bipartite_model(20, 20, seed)
        convex_bipartite_decomposition(q, intervals)
        interval_graph(random_interval_model(30, seed))


def test_parse_examples():
    k3 = parse_graph("3 3\n0 1\n1 2\n0 2")
    assert k3.m == 3
    assert parse_graph("2 1\n0 1").edges == ((0, 1),)
    with pytest.raises(DisconnectedGraphError):
        parse_graph("4 2\n0 1\n2 3")


def test_parse_comments_and_whitespace():
    g = parse_graph("# a triangle\n3   3\n\n0 1\n  # inner comment\n1\t2\n0 2\n")
    assert g.m == 3


@pytest.mark.parametrize(
    "text,line",
    [
        ("3\n0 1\n1 2", 1),
        ("3 2\n0 1\n1 x", 3),
        ("3 2\n0 1\n1 5", 3),
        ("3 2\n0 1\n1 1", 3),
        ("3 1\n0 1\n1 2", 3),
    ],
)
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(ParseError) as info:
        parse_graph(text)
    assert info.value.line == line


def test_duplicate_edge_warns():
    with pytest.warns(DuplicateEdgeWarning):
        g = parse_graph("3 3\n0 1\n1 0\n1 2")
    assert g.m == 2


def test_model_examples():
    assert parse_model("permutation", "3 4 1 2") == [3, 4, 1, 2]
    assert parse_model("trapezoid", "1 3 1 3\n2 5 2 5") == [(1, 3, 1, 3), (2, 5, 2, 5)]
    cb = parse_model("convex-bipartite", "2 2\n1 2\n2 2")
    assert cb == ConvexBipartiteModel(2, ((1, 2), (2, 2)))
    _, pd = convex_bipartite_decomposition(cb.u_count, cb.intervals)
    assert [set(b) for b in pd.bags] == [{0, 2}, {1, 2, 3}]


@pytest.mark.parametrize(
    "kind,text",
    [
        ("permutation", "1 2 2"),
        ("permutation", "1 2\n3"),
        ("trapezoid", "1 3 1"),
        ("trapezoid", "3 1 1 3"),
        ("convex-bipartite", "2 2\n1 2"),
        ("convex-bipartite", "2 1\n2 1"),
    ],
)
def test_model_errors(kind, text):
    with pytest.raises(ParseError):
        parse_model(kind, text)


def test_model_round_trip():
    for kind, model in (
        ("permutation", [2, 4, 1, 3]),
        ("trapezoid", [(1, 3, 1, 3), (2, 5, 2, 5)]),
        ("convex-bipartite", ConvexBipartiteModel(2, ((1, 2), (2, 2)))),
    ):
        assert parse_model(kind, serialize_model(kind, model)) == model


@settings(max_examples=80, deadline=None)
@given(connected_graphs())
def test_graph_round_trip(g):
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        assert parse_graph(serialize_graph(g)) == g
