import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import bellman_ford, brute_partial_set, floyd_warshall
from qgraph.classical import (
    approx_diameter_acim,
    approx_diameter_rw,
    bfs,
    dijkstra,
    eccentricities,
    exact_metrics_bruteforce,
    greedy_hitting_set,
    hitting_set_size,
    is_hitting_set,
    partial_bfs,
    partial_search,
    sample_hitting_set,
)
from qgraph.errors import Disconnected
from qgraph.graph import Graph, cycle_graph, gen_connected_random, path_graph, star_graph
from qgraph.ledger import QueryLedger
from qgraph.results import validate_path

TRIANGLE = Graph(3, [(0, 1, 5.0), (1, 2, 1.0), (0, 2, 1.0)])


def test_bfs_examples():
    assert bfs(path_graph(4), 0).depth == 3
    assert bfs(cycle_graph(6), 2).depth == 3
    assert bfs(star_graph(4), 3).depth == 2
    with pytest.raises(Disconnected):
        bfs(Graph(4, [(0, 1), (2, 3)]), 0)


def test_bfs_counts_probes():
    led = QueryLedger()
    g = cycle_graph(7)
    bfs(g, 0, led)
    assert led.oracle_queries == 2 * g.m


def test_partial_bfs_examples():
    r = partial_bfs(path_graph(8), 0, 4)
    assert r.visited == (0, 1, 2, 3) and r.depth == 3
    r = partial_bfs(star_graph(6), 0, 3)
    assert r.visited == (0, 1, 2) and r.depth == 1
    g = gen_connected_random(30, 60, seed=1)
    full = bfs(g, 4)
    r = partial_bfs(g, 4, 100)
    assert list(r.visited) == full.order and r.depth == full.depth


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 30), st.integers(0, 10**6), st.integers(1, 35))
def test_partial_bfs_invariants(n, seed, s):
    g = gen_connected_random(n, min(2 * n, n * (n - 1) // 2), seed=seed)
    v = seed % n
    r = partial_bfs(g, v, s)
    ref, level = brute_partial_set(g, v, s)
    assert list(r.visited) == ref
    assert len(r.visited) == min(s, n) and r.visited[0] == v
    lv = [r.levels[x] for x in r.visited]
    assert lv == sorted(lv)
    assert r.depth == level[r.visited[-1]]


def test_dijkstra_examples():
    assert dijkstra(TRIANGLE, 0).dist[1] == 2.0
    g = gen_connected_random(25, 50, seed=2)
    assert dijkstra(g, 3).dist == [float(x) for x in bfs(g, 3).levels]


def test_dijkstra_matches_bellman_ford():
    for seed in range(100):
        n = 5 + seed % 40
        g = gen_connected_random(n, min(3 * n, n * (n - 1) // 2), "uniform:0.5:20", seed)
        assert dijkstra(g, seed % n).dist == pytest.approx(bellman_ford(g, seed % n), rel=1e-12)


def test_exact_metrics_examples():
    r = exact_metrics_bruteforce(cycle_graph(5))
    assert (r.diameter, r.radius) == (2, 2)
    r = exact_metrics_bruteforce(path_graph(4))
    assert (r.diameter, r.radius) == (3, 2)
    r = exact_metrics_bruteforce(star_graph(5))
    assert (r.diameter, r.radius) == (2, 1)


def test_exact_metrics_match_floyd_warshall():
    rng = np.random.default_rng(0)
    for seed in range(200):
        n = int(rng.integers(2, 65))
        m = int(rng.integers(n - 1, min(4 * n, n * (n - 1) // 2) + 1))
        g = gen_connected_random(n, m, "uniform:1:10" if seed % 2 else "unit", seed)
        rep = exact_metrics_bruteforce(g)
        fw = floyd_warshall(g)
        assert np.allclose(rep.distances, fw, rtol=1e-12)
        ecc = fw.max(axis=1)
        assert rep.diameter == pytest.approx(ecc.max())
        assert rep.radius == pytest.approx(ecc.min())
        assert validate_path(g, rep.diameter_witness, rep.diameter)
        assert validate_path(g, rep.radius_witness, rep.radius)
        assert eccentricities(g, range(n)) == pytest.approx(list(ecc))


def test_hitting_set_size_formula():
    assert hitting_set_size(1000, 32, 2) == 432
    assert hitting_set_size(50, 50, 2) == math.ceil(2 * math.log(50))
    assert hitting_set_size(10, 1, 5) == 10
    assert hitting_set_size(1, 1, 2) == 1


def test_sample_hitting_set():
    g = gen_connected_random(100, 300, seed=3)
    hs = sample_hitting_set(g, 100, 2, np.random.default_rng(0))
    assert len(hs) == math.ceil(2 * math.log(100))
    assert is_hitting_set(g, hs.members, 100)
    hs = sample_hitting_set(g, 10, 2, np.random.default_rng(1))
    assert len(set(hs.members)) == len(hs) == hitting_set_size(100, 10, 2)
    assert all(0 <= x < 100 for x in hs.members)


def test_greedy_hitting_set_hits():
    g = gen_connected_random(80, 200, seed=4)
    sets = [partial_search(g, v, 9).visited for v in range(80)]
    hs = greedy_hitting_set(sets, 80)
    assert all(set(hs) & set(s) for s in sets)


def test_acim_examples():
    r = approx_diameter_acim(path_graph(10), 3)
    assert 6 <= r.estimate <= 9
    assert 1 <= approx_diameter_acim(star_graph(6), 2).estimate <= 2
    for n in (6, 9, 12):
        assert approx_diameter_acim(cycle_graph(n), 3).estimate <= n // 2


def test_acim_bounds_deterministic():
    for seed in range(100):
        n = 10 + seed % 119
        g = gen_connected_random(n, min(n + seed % 3 * n, n * (n - 1) // 2), seed=seed)
        D = exact_metrics_bruteforce(g).diameter
        r = approx_diameter_acim(g, math.ceil(math.sqrt(n)))
        assert math.floor(2 * D / 3) <= r.estimate <= D
        assert validate_path(g, r.witness, r.estimate)


def test_rw_examples():
    ok = 0
    for seed in range(50):
        r = approx_diameter_rw(path_graph(16), 4, 2, np.random.default_rng(seed))
        assert r.estimate <= 15
        ok += r.estimate >= 10
    assert ok >= 48
    for seed in range(20):
        r = approx_diameter_rw(cycle_graph(8), 3, 2, np.random.default_rng(seed))
        assert 2 <= r.estimate <= 4
        assert approx_diameter_rw(star_graph(7), 2, 2, np.random.default_rng(seed)).estimate in (1, 2)
