"""Simulated quantum algorithms for eccentricity, diameter, radius and the
2/3-approximation of the diameter.

Outer searches run the simulated Dürr–Høyer loop over vertices whose oracle
is itself a whole subroutine (an eccentricity computation or a partial BFS).
The simulator evaluates those oracles classically once per vertex and caches
the values; each quantum oracle query is still booked at the full price of
one subroutine run.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from heapq import heappop, heappush
from typing import Optional

import numpy as np

from .classical import eccentricities, sample_hitting_set
from .errors import Disconnected, InvalidParam, TrivialGraph
from .graph import Graph, degree, is_connected, oracle_query
from .ledger import QueryLedger, SimConfig, spawn
from .qsim import qbfs, qbfs_cost, qmf_min, qsssp, qsssp_cost, qtf
from .results import ApproxResult, PartialBfsResult, PathResult, SsspResult

SSSP = "sssp"
BFS = "bfs"


@dataclass
class PartialSearchBatch:
    source: int
    found_indices: tuple[int, ...]
    m_v: int
    doubling_rounds: list[int] = field(default_factory=list)


def _check_connected(g: Graph) -> None:
    if not is_connected(g):
        raise Disconnected()


def _rng(cfg: SimConfig, rng: Optional[np.random.Generator]) -> np.random.Generator:
    return rng if rng is not None else cfg.rng()


def max_find_cost(n: int, cfg: SimConfig) -> int:
    """Price of one Grover search for the longest of the ``n - 1`` paths."""
    return math.ceil(cfg.const("qmf") * math.sqrt(max(n - 1, 1)))


def eccentricity_oracle_cost(g: Graph, cfg: SimConfig, method: str = SSSP) -> int:
    """Cost of one eccentricity-oracle invocation inside an outer search."""
    base = qsssp_cost(g, cfg) if method == SSSP else qbfs_cost(g, cfg)
    return base + max_find_cost(g.n, cfg)


def _search_tree(g: Graph, v: int, cfg: SimConfig, ledger: QueryLedger, method: str) -> SsspResult:
    if method == SSSP:
        return qsssp(g, v, cfg, ledger)
    if method == BFS:
        res = qbfs(g, v, cfg, ledger)
        return SsspResult(v, [float(x) for x in res.levels], res.parent)
    raise InvalidParam(f"unknown method {method!r}")


def q_eccentricity(g: Graph, v: int, cfg: SimConfig, ledger: QueryLedger,
                   rng: Optional[np.random.Generator] = None, *,
                   method: str = SSSP) -> tuple[float, PathResult]:
    """Eccentricity of ``v`` with the path to its farthest vertex.

    One shortest-path tree (``method`` ``"sssp"`` or ``"bfs"``) followed by
    simulated maximum finding over the ``n - 1`` tree distances.
    """
    _check_connected(g)
    if not 0 <= v < g.n:
        raise InvalidParam(f"vertex {v} not in graph")
    rng = _rng(cfg, rng)
    tree = _search_tree(g, v, cfg, ledger, method)
    if g.n == 1:
        return 0.0, PathResult((v, v), 0.0, (v,))
    targets = [u for u in range(g.n) if u != v]
    keys = tree.ranks()
    i, _ = qmf_min([keys[u] for u in targets], len(targets), cfg, ledger, rng,
                   maximize=True)
    t = targets[i]
    return tree.dist[t], tree.witness(t)


def eccentricity_table(g: Graph, vertices, ledger: Optional[QueryLedger] = None) -> list[float]:
    """True eccentricities, computed once per vertex for the simulator's cache."""
    return eccentricities(g, vertices, ledger)


def _extremal(g: Graph, cfg: SimConfig, ledger: QueryLedger,
              rng: Optional[np.random.Generator], maximize: bool) -> tuple[float, PathResult]:
    if g.n < 2:
        raise TrivialGraph("need at least two vertices")
    _check_connected(g)
    rng = _rng(cfg, rng)
    ecc = eccentricity_table(g, range(g.n), ledger)
    unit = eccentricity_oracle_cost(g, cfg, SSSP)
    name = "diameter_search" if maximize else "radius_search"
    v_star, _ = qmf_min(ecc, g.n, cfg, ledger, rng, unit=(unit, unit), name=name,
                        maximize=maximize)
    return q_eccentricity(g, v_star, cfg, ledger, rng)


def q_diameter(g: Graph, cfg: SimConfig, ledger: QueryLedger,
               rng: Optional[np.random.Generator] = None) -> tuple[float, PathResult]:
    """Diameter and a witness path: maximum finding over vertex eccentricities."""
    return _extremal(g, cfg, ledger, rng, maximize=True)


def q_radius(g: Graph, cfg: SimConfig, ledger: QueryLedger,
             rng: Optional[np.random.Generator] = None) -> tuple[float, PathResult]:
    """Radius and the path from a center to its farthest vertex."""
    return _extremal(g, cfg, ledger, rng, maximize=False)


# ---------------------------------------------------------------------------
# partial BFS


def partial_search_batch(g: Graph, u: int, visited, cfg: SimConfig, ledger: QueryLedger,
                         rng: np.random.Generator) -> PartialSearchBatch:
    """Find every unvisited neighbor of ``u`` by threshold finding with doubling
    thresholds 1, 2, 4, ... (capped at ``deg(u)``) until one certifies."""
    deg = degree(g, u)
    if deg == 0:
        return PartialSearchBatch(u, (), 0, [])
    table = [oracle_query(g, u, i, ledger)[0] not in visited for i in range(deg)]
    rounds = []
    k = 0
    while True:
        t = min(2 ** k, deg)
        out = qtf(table, deg, t, cfg, ledger, rng)
        rounds.append(t)
        if out.flag:
            found = tuple(sorted(out.index_set))
            return PartialSearchBatch(u, found, len(found), rounds)
        k += 1


def qpbfs(g: Graph, v: int, s: int, cfg: SimConfig, ledger: QueryLedger,
          rng: Optional[np.random.Generator] = None) -> PartialBfsResult:
    """Partial BFS that discovers each vertex's unvisited neighbors in batches.

    Returns the first ``min(s, n)`` vertices in visit order and the level of
    the last one.  Vertices join the visited set when their batch is found,
    so the FIFO frontier never holds stale entries.
    """
    if g.weighted:
        raise InvalidParam("qpbfs needs an unweighted graph; use qpbfs_weighted")
    if s < 1:
        raise InvalidParam("s must be at least 1")
    rng = _rng(cfg, rng)
    limit = min(s, g.n)
    visited = {v}
    order = [v]
    levels = {v: 0}
    parent = {v: -1}
    frontier = deque([v])
    while frontier and len(order) < s:
        u = frontier.popleft()
        batch = partial_search_batch(g, u, visited, cfg, ledger, rng)
        nb = g.neighbors(u)
        h = levels[u] + 1
        for i in batch.found_indices:
            x = nb[i]
            visited.add(x)
            order.append(x)
            levels[x] = h
            parent[x] = u
            frontier.append(x)
    kept = order[:limit]
    return PartialBfsResult(v, tuple(kept), levels[kept[-1]],
                            {x: parent[x] for x in kept}, {x: levels[x] for x in kept})


def qpbfs_weighted(g: Graph, v: int, s: int, cfg: SimConfig, ledger: QueryLedger,
                   rng: Optional[np.random.Generator] = None) -> PartialBfsResult:
    """Weighted analogue: the ``min(s, n)`` closest vertices by distance.

    The answer is a truncated Dijkstra run; each settled vertex whose list is
    expanded is charged the same doubling threshold-finding batch as in the
    unweighted routine, over its not-yet-discovered neighbors.
    """
    if s < 1:
        raise InvalidParam("s must be at least 1")
    rng = _rng(cfg, rng)
    limit = min(s, g.n)
    dist = {v: 0.0}
    parent = {v: -1}
    done = set()
    order = []
    heap = [(0.0, v)]
    while heap and len(order) < limit:
        d, u = heappop(heap)
        if u in done:
            continue
        done.add(u)
        order.append(u)
        if len(order) == limit:
            break
        partial_search_batch(g, u, dist.keys(), cfg, ledger, rng)
        for x, w in zip(g.neighbors(u), g.weights(u)):
            nd = d + w
            if nd < dist.get(x, math.inf):
                dist[x] = nd
                parent[x] = u
                heappush(heap, (nd, x))
    return PartialBfsResult(v, tuple(order), dist[order[-1]],
                            {x: parent[x] for x in order}, {x: dist[x] for x in order})


def q_partial_search(g: Graph, v: int, s: int, cfg: SimConfig, ledger: QueryLedger,
             rng: np.random.Generator) -> PartialBfsResult:
    if g.weighted:
        return qpbfs_weighted(g, v, s, cfg, ledger, rng)
    return qpbfs(g, v, s, cfg, ledger, rng)


def default_s(n: int, preset: str = "sqrt") -> int:
    """Partial-search size: ``ceil(sqrt n)`` or the ``"quarter"`` preset ``ceil(n ** 0.25)``."""
    if preset == "sqrt":
        return max(1, math.ceil(math.sqrt(n)))
    if preset == "quarter":
        return max(1, math.ceil(n ** 0.25))
    raise InvalidParam(f"unknown s preset {preset!r}")


def q_approx_diameter(g: Graph, s: Optional[int], sample_const: float, cfg: SimConfig,
                      ledger: QueryLedger, rng: Optional[np.random.Generator] = None) -> ApproxResult:
    """Estimate the diameter within a factor 2/3, with a witness path.

    1. sample a hitting set ``H``;
    2. pick ``w`` in ``H`` with the deepest partial search tree (maximum
       finding, each query priced at the most expensive partial search);
    3. recompute ``N_s(w)``;
    4. maximum finding over eccentricities of ``H`` and ``N_s(w)``, then one
       more eccentricity run from the winner to produce the path.
    """
    _check_connected(g)
    n = g.n
    s = default_s(n) if s is None else int(s)
    if not 1 <= s <= n:
        raise InvalidParam(f"s={s} outside [1, {n}]")
    rng = _rng(cfg, rng)
    hs = sample_hitting_set(g, s, sample_const, spawn(rng))
    ledger.charge("sample_hitting_set", 0.0, float(len(hs)))

    depths = []
    costs_q, costs_t = [], []
    for h in hs.members:
        scratch = QueryLedger()
        depths.append(q_partial_search(g, h, s, cfg, scratch, spawn(rng)).depth)
        ledger.absorb_probes(scratch)
        costs_q.append(scratch.charged_queries)
        costs_t.append(scratch.charged_time)
    unit2 = (max(max(costs_q), 1.0), max(max(costs_t), 1.0))
    i, _ = qmf_min(depths, len(depths), cfg, ledger, rng, unit=unit2,
                   name="approx_select_w", maximize=True)
    w = hs.members[i]

    n_s_w = q_partial_search(g, w, s, cfg, ledger, spawn(rng)).visited

    cands = sorted(set(hs.members).union(n_s_w))
    method = SSSP if g.weighted else BFS
    ecc = eccentricity_table(g, cands, ledger)
    unit4 = eccentricity_oracle_cost(g, cfg, method)
    j, _ = qmf_min(ecc, len(cands), cfg, ledger, rng, unit=(unit4, unit4),
                   name="approx_search_ecc", maximize=True)
    value, path = q_eccentricity(g, cands[j], cfg, ledger, rng, method=method)
    return ApproxResult(value, path, w, hs, tuple(n_s_w), tuple(cands))
