"""Classical reference algorithms: searches, exact metrics, 2/3-approximations.

All routines break ties by lowest vertex index.  When a ``ledger`` is given,
every adjacency-list entry the routine reads is recorded as one oracle probe.
"""
from __future__ import annotations

import math
from fractions import Fraction
from collections import deque
from heapq import heappop, heappush
from typing import Optional

import numpy as np

from .errors import Disconnected, InvalidParam
from .graph import Graph
from .ledger import QueryLedger
from .results import (
    ApproxResult,
    BfsResult,
    HittingSet,
    MetricsReport,
    PartialBfsResult,
    PathResult,
    SsspResult,
)

INF = math.inf


def bfs(g: Graph, v: int, ledger: Optional[QueryLedger] = None) -> BfsResult:
    n = g.n
    levels = [-1] * n
    parent = [-1] * n
    levels[v] = 0
    order = [v]
    queue = deque([v])
    probes = 0
    while queue:
        u = queue.popleft()
        nb = g.neighbors(u)
        probes += len(nb)
        lu = levels[u] + 1
        for x in nb:
            if levels[x] < 0:
                levels[x] = lu
                parent[x] = u
                order.append(x)
                queue.append(x)
    if ledger is not None:
        ledger.probe(probes)
    if len(order) < n:
        raise Disconnected()
    return BfsResult(levels, levels[order[-1]], parent, order)


def dijkstra(g: Graph, v: int, ledger: Optional[QueryLedger] = None) -> SsspResult:
    """Binary-heap Dijkstra; a parent changes only on strict improvement.

    Graphs whose weights span more than ~15 decimal orders are summed in exact
    rationals, so tiny edges still separate paths; distances come back as floats.
    """
    n = g.n
    exact = g.needs_exact_sums
    zero = Fraction(0) if exact else 0.0
    dist = [INF] * n
    parent = [-1] * n
    done = [False] * n
    dist[v] = zero
    heap = [(zero, v)]
    settled = 0
    probes = 0
    while heap:
        d, u = heappop(heap)
        if done[u]:
            continue
        done[u] = True
        settled += 1
        nb = g.neighbors(u)
        wt = g.weights(u)
        probes += len(nb)
        for i in range(len(nb)):
            x = nb[i]
            nd = d + (Fraction(wt[i]) if exact else wt[i])
            if nd < dist[x]:
                dist[x] = nd
                parent[x] = u
                heappush(heap, (nd, x))
    if ledger is not None:
        ledger.probe(probes)
    if settled < n:
        raise Disconnected()
    if exact:
        return SsspResult(v, [float(x) for x in dist], parent, dist)
    return SsspResult(v, dist, parent)


def bfs_sssp(g: Graph, v: int, ledger: Optional[QueryLedger] = None) -> SsspResult:
    """BFS distances packaged like a shortest-path result (unit weights)."""
    res = bfs(g, v, ledger)
    return SsspResult(v, [float(x) for x in res.levels], res.parent)


def shortest_paths(g: Graph, v: int, ledger: Optional[QueryLedger] = None) -> SsspResult:
    return dijkstra(g, v, ledger) if g.weighted else bfs_sssp(g, v, ledger)


def eccentricities(g: Graph, sources, ledger: Optional[QueryLedger] = None) -> list[float]:
    """Eccentricity of each source, via scipy's compiled shortest-path kernels.

    Each source costs one full adjacency scan (``2m`` probes), the same as
    :func:`shortest_paths`.
    """
    from scipy.sparse.csgraph import shortest_path

    sources = list(sources)
    if not sources:
        return []
    d = shortest_path(g.csr(), directed=False, unweighted=not g.weighted, indices=sources)
    if ledger is not None:
        ledger.probe(2 * g.m * len(sources))
    ecc = d.max(axis=1)
    if not np.all(np.isfinite(ecc)):
        raise Disconnected()
    return ecc.tolist()


def partial_bfs(g: Graph, v: int, s: int, ledger: Optional[QueryLedger] = None) -> PartialBfsResult:
    """First ``min(s, n)`` vertices in BFS discovery order from ``v``."""
    if s < 1:
        raise InvalidParam("s must be at least 1")
    limit = min(s, g.n)
    levels = {v: 0}
    parent = {v: -1}
    order = [v]
    queue = deque([v])
    probes = 0
    while queue and len(order) < limit:
        u = queue.popleft()
        lu = levels[u] + 1
        for x in g.neighbors(u):
            probes += 1
            if x not in levels:
                levels[x] = lu
                parent[x] = u
                order.append(x)
                queue.append(x)
                if len(order) == limit:
                    break
    if ledger is not None:
        ledger.probe(probes)
    return PartialBfsResult(v, tuple(order), levels[order[-1]], parent, levels)


def partial_dijkstra(g: Graph, v: int, s: int, ledger: Optional[QueryLedger] = None) -> PartialBfsResult:
    """The ``min(s, n)`` closest vertices to ``v`` in settle order."""
    if s < 1:
        raise InvalidParam("s must be at least 1")
    limit = min(s, g.n)
    dist = {v: 0.0}
    parent = {v: -1}
    done = set()
    order = []
    heap = [(0.0, v)]
    probes = 0
    while heap and len(order) < limit:
        d, u = heappop(heap)
        if u in done:
            continue
        done.add(u)
        order.append(u)
        if len(order) == limit:
            break
        nb = g.neighbors(u)
        wt = g.weights(u)
        probes += len(nb)
        for i in range(len(nb)):
            x = nb[i]
            nd = d + wt[i]
            if nd < dist.get(x, INF):
                dist[x] = nd
                parent[x] = u
                heappush(heap, (nd, x))
    if ledger is not None:
        ledger.probe(probes)
    kept = {u: dist[u] for u in order}
    return PartialBfsResult(v, tuple(order), dist[order[-1]], {u: parent[u] for u in order}, kept)


def partial_search(g: Graph, v: int, s: int, ledger: Optional[QueryLedger] = None) -> PartialBfsResult:
    return partial_dijkstra(g, v, s, ledger) if g.weighted else partial_bfs(g, v, s, ledger)


def _argmax(values) -> int:
    best, arg = -INF, 0
    for i, x in enumerate(values):
        if x > best:
            best, arg = x, i
    return arg


def _argmin(values) -> int:
    best, arg = INF, 0
    for i, x in enumerate(values):
        if x < best:
            best, arg = x, i
    return arg


def exact_metrics_bruteforce(g: Graph, ledger: Optional[QueryLedger] = None) -> MetricsReport:
    """Eccentricities, diameter and radius by a shortest-path run from every vertex."""
    n = g.n
    dmat = np.empty((n, n))
    ecc = []
    witnesses = []
    for v in range(n):
        res = shortest_paths(g, v, ledger)
        dmat[v] = res.dist
        t = res.farthest()
        ecc.append(res.dist[t])
        witnesses.append(res.witness(t))
    dv = _argmax(ecc)
    rv = _argmin(ecc)
    return MetricsReport(
        eccentricity=ecc,
        diameter=ecc[dv],
        radius=ecc[rv],
        diameter_witness=witnesses[dv],
        radius_witness=witnesses[rv],
        eccentricity_witness=witnesses,
        distances=dmat,
    )


# ---------------------------------------------------------------------------
# hitting sets


def hitting_set_size(n: int, s: int, sample_const: float) -> int:
    return min(n, max(1, math.ceil(sample_const * (n / s) * math.log(n))))


def sample_hitting_set(g: Graph, s: int, sample_const: float, rng: np.random.Generator) -> HittingSet:
    """Uniform sample without replacement of size ``ceil(c * n/s * ln n)``."""
    n = g.n
    if not 1 <= s <= n:
        raise InvalidParam(f"s={s} outside [1, {n}]")
    k = hitting_set_size(n, s, sample_const)
    members = np.sort(rng.choice(n, size=k, replace=False))
    return HittingSet(tuple(int(x) for x in members), s, sample_const)


def greedy_hitting_set(sets: list[tuple[int, ...]], n: int) -> list[int]:
    """Greedy cover: repeatedly take the vertex hitting the most open sets."""
    containing: list[list[int]] = [[] for _ in range(n)]
    for j, members in enumerate(sets):
        for x in members:
            containing[x].append(j)
    counts = np.array([len(c) for c in containing], dtype=np.int64)
    open_sets = [True] * len(sets)
    remaining = len(sets)
    chosen = []
    while remaining:
        x = int(np.argmax(counts))
        chosen.append(x)
        for j in containing[x]:
            if open_sets[j]:
                open_sets[j] = False
                remaining -= 1
                for y in sets[j]:
                    counts[y] -= 1
    return sorted(chosen)


def is_hitting_set(g: Graph, members, s: int) -> bool:
    hs = set(members)
    return all(hs.intersection(partial_search(g, v, s).visited) for v in range(g.n))


# ---------------------------------------------------------------------------
# 2/3-approximations


def _best_eccentricity(g: Graph, sources, ledger) -> tuple[float, PathResult]:
    sources = sorted(set(sources))
    ecc = eccentricities(g, sources, ledger)
    res = shortest_paths(g, sources[_argmax(ecc)])
    t = res.farthest()
    return res.dist[t], res.witness(t)


def approx_diameter_acim(g: Graph, s: int, ledger: Optional[QueryLedger] = None) -> ApproxResult:
    """Deterministic 2/3-approximation with a greedy hitting set."""
    if not 1 <= s:
        raise InvalidParam("s must be at least 1")
    n = g.n
    partials = [partial_search(g, v, s, ledger) for v in range(n)]
    w = _argmax([p.depth for p in partials])
    n_s_w = partials[w].visited
    hs = greedy_hitting_set([p.visited for p in partials], n)
    best, wit = _best_eccentricity(g, [w, *n_s_w, *hs], ledger)
    return ApproxResult(best, wit, w, HittingSet(tuple(hs), s, 0.0), n_s_w,
                        tuple(sorted({w, *n_s_w, *hs})))


def approx_diameter_rw(g: Graph, s: int, sample_const: float, rng: np.random.Generator,
                       ledger: Optional[QueryLedger] = None) -> ApproxResult:
    """Randomized 2/3-approximation from a sampled hitting set."""
    hs = sample_hitting_set(g, s, sample_const, rng)
    depths = [partial_search(g, h, s, ledger).depth for h in hs.members]
    w = hs.members[_argmax(depths)]
    n_s_w = partial_search(g, w, s, ledger).visited
    best, wit = _best_eccentricity(g, [*hs.members, *n_s_w], ledger)
    return ApproxResult(best, wit, w, hs, n_s_w, tuple(sorted({*hs.members, *n_s_w})))
