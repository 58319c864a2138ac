import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qgraph.errors import GraphFormatError, IndexOutOfRange, InvalidEdgeCount
from qgraph.graph import (
    Graph,
    complete_graph,
    degree,
    gen_connected_random,
    gen_random_regular,
    is_connected,
    oracle_query,
    parse_edge_list,
    path_graph,
    read_edge_list,
    star_graph,
    write_edge_list,
    format_edge_list,
)
from qgraph.ledger import QueryLedger


def test_oracle_returns_index_ordered_neighbors():
    g = path_graph(3)
    led = QueryLedger()
    assert oracle_query(g, 1, 0, led) == (0, 1.0)
    assert led.oracle_queries == 1
    assert oracle_query(g, 1, 1, led) == (2, 1.0)
    assert led.oracle_queries == 2


def test_oracle_out_of_range():
    led = QueryLedger()
    with pytest.raises(IndexOutOfRange):
        oracle_query(path_graph(3), 0, 5, led)
    assert led.oracle_queries == 0


def test_degree_is_free():
    led = QueryLedger()
    assert degree(star_graph(4), 0) == 4
    assert degree(path_graph(4), 0) == 1
    assert degree(complete_graph(3), 2) == 2
    assert led.oracle_queries == 0


def test_generator_edge_cases():
    t = gen_connected_random(5, 4, "unit", seed=3)
    assert t.m == 4 and is_connected(t)
    assert gen_connected_random(4, 6, "unit", seed=0) == complete_graph(4)
    with pytest.raises(InvalidEdgeCount):
        gen_connected_random(5, 3)
    with pytest.raises(InvalidEdgeCount):
        gen_connected_random(5, 11)


def test_generator_is_seeded():
    a = gen_connected_random(40, 100, ("uniform", 1.0, 5.0), seed=11)
    b = gen_connected_random(40, 100, "uniform:1:5", seed=11)
    assert a == b
    assert a != gen_connected_random(40, 100, "uniform:1:5", seed=12)
    assert all(1.0 <= w < 5.0 for _, _, w in a.edges())


@settings(max_examples=100, deadline=None)
@given(st.integers(2, 40), st.data(), st.integers(0, 2**32))
def test_generated_graphs_connected_and_symmetric(n, data, seed):
    m = data.draw(st.integers(n - 1, n * (n - 1) // 2))
    g = gen_connected_random(n, m, "uniform:0.5:3", seed)
    assert g.n == n and g.m == m
    assert is_connected(g)
    for u in range(n):
        for v, w in zip(g.neighbors(u), g.weights(u)):
            assert g.weight(v, u) == w
        assert g.neighbors(u) == sorted(g.neighbors(u))


def test_regular_generator():
    g = gen_random_regular(64, 8, seed=2)
    assert all(degree(g, v) == 8 for v in range(64))
    assert is_connected(g)


@pytest.mark.parametrize("edges", [
    [(0, 0, 1.0)],
    [(0, 1, 0.0)],
    [(0, 1, -1.0)],
    [(0, 1, float("nan"))],
    [(0, 1, 1.0), (1, 0, 1.0)],
    [(0, 1, 1.0), (1, 0, 2.0)],
    [(0, 5, 1.0)],
])
def test_invalid_edges_rejected(edges):
    with pytest.raises(GraphFormatError):
        Graph(3, edges)


def test_edge_list_round_trip(tmp_path):
    g = gen_connected_random(20, 45, "uniform:1:9", seed=5)
    p = tmp_path / "g.txt"
    write_edge_list(g, p)
    assert read_edge_list(p) == g
    h = path_graph(4)
    text = format_edge_list(h)
    assert text.splitlines()[0] == "p 4 3 unweighted"
    assert parse_edge_list(text) == h


def test_parse_errors():
    with pytest.raises(GraphFormatError):
        parse_edge_list("0 1 1\n")
    with pytest.raises(GraphFormatError):
        parse_edge_list("p 3 2 unweighted\n0 1 1\n")
    with pytest.raises(GraphFormatError):
        parse_edge_list("p 3 1 unweighted\n0 1 2\n")
    g = parse_edge_list("# comment\np 3 2 weighted\n0 1 2.5\n# mid\n1 2 1\n")
    assert g.weight(0, 1) == 2.5 and g.weighted
