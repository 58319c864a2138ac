"""Classical simulation of the quantum search-type subroutines.

QSearch is simulated round by round from the closed-form Grover success
probability, so its query-count distribution is exact without a statevector.
Minimum finding (Dürr–Høyer) and threshold finding are built on top of it.
Compound routines (k-type minimum finding, BFS, single-source shortest paths)
return the exact classical answer and book the analytic charge of their
query bound.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence, Union

import numpy as np

from .classical import bfs, dijkstra
from .errors import Disconnected, InvalidParam, InvalidThreshold
from .graph import Graph, is_connected
from .ledger import QueryLedger, SimConfig, log2p1
from .results import BfsResult, SsspResult

Predicate = Union[Callable[[int], bool], Sequence[bool], np.ndarray]


@dataclass
class QSearchState:
    N: int
    k: int
    M: float = 1.0
    j: int = 0
    theta: float = 0.0
    total_iterations: int = 0
    pinned_iterations: int = 0
    rounds: int = 0


@dataclass(frozen=True)
class QtfOutcome:
    flag: bool
    index_set: frozenset = field(default_factory=frozenset)
    t: int = 1


def grover_success_prob(N: int, k: int, j: int) -> float:
    """Probability of measuring a marked item after ``j`` Grover iterations."""
    if not (N >= 1 and 0 <= k <= N and j >= 0):
        raise InvalidParam("need N >= 1, 0 <= k <= N, j >= 0")
    theta = math.asin(math.sqrt(k / N))
    return math.sin((2 * j + 1) * theta) ** 2


def marked_indices(pred: Predicate, N: int) -> np.ndarray:
    """Evaluate a predicate over ``[0, N)``; simulator bookkeeping, not charged."""
    if callable(pred):
        return np.array([i for i in range(N) if pred(i)], dtype=np.int64)
    arr = np.asarray(pred, dtype=bool)
    if arr.shape != (N,):
        raise InvalidParam(f"predicate table has shape {arr.shape}, expected ({N},)")
    return np.flatnonzero(arr)


def grover_round(marked: np.ndarray, N: int, j: int, rng: np.random.Generator) -> Optional[int]:
    """One measure-and-check round after ``j`` iterations; marked index or None."""
    p = grover_success_prob(N, len(marked), j)
    if rng.random() < p:
        return int(marked[rng.integers(len(marked))])
    return None


def qsearch(pred: Predicate, N: int, cfg: SimConfig, ledger: QueryLedger,
            rng: np.random.Generator, *, unit: tuple[float, float] = (1.0, 1.0),
            name: str = "qsearch", trace: Optional[list] = None) -> Optional[int]:
    """Search with an unknown number of marked items.

    Returns a marked index or ``None`` (no solution).  Every oracle query is
    booked at ``unit = (queries, time)``, so the caller can price an oracle
    that is itself an expensive subroutine.

    Stochastic mode follows the randomized schedule: draw ``j`` uniformly
    below ``ceil(M)``, spend ``j + 1`` queries, succeed with the Grover
    probability, otherwise grow ``M`` by ``lam`` up to ``sqrt(N)``.  The
    search gives up once the iterations spent with ``M`` pinned at
    ``sqrt(N)`` exceed ``qsearch_cutoff_const * sqrt(N)``.
    """
    if N < 1:
        raise InvalidParam("search space must be non-empty")
    marked = marked_indices(pred, N)
    k = len(marked)
    root = math.sqrt(N)
    if cfg.idealized:
        if k:
            queries = math.ceil(math.sqrt(N / k))
            found = int(marked[rng.integers(k)])
        else:
            queries = math.ceil(root)
            found = None
        ledger.charge(name, queries * unit[0], queries * unit[1])
        return found

    st = QSearchState(N=N, k=k, theta=math.asin(math.sqrt(k / N)))
    queries = 0
    found = None
    cutoff = cfg.qsearch_cutoff_const * root
    while True:
        pinned = st.M >= root
        st.j = int(rng.integers(0, math.ceil(st.M)))
        st.rounds += 1
        st.total_iterations += st.j
        queries += st.j + 1
        if k:
            p = math.sin((2 * st.j + 1) * st.theta) ** 2
            success = rng.random() < p
        else:
            success = False
        if trace is not None:
            trace.append((st.M, st.j, success))
        if success:
            found = int(marked[rng.integers(k)])
            break
        if pinned:
            # j + 1 so that N = 1 (j always 0) still terminates
            st.pinned_iterations += st.j + 1
            if st.pinned_iterations > cutoff:
                break
        st.M = min(cfg.lam * st.M, root)
    ledger.charge(name, queries * unit[0], queries * unit[1])
    return found


def qmf_min(value: Union[Callable[[int], float], Sequence[float]], N: int, cfg: SimConfig,
            ledger: QueryLedger, rng: np.random.Generator, *,
            unit: tuple[float, float] = (1.0, 1.0), name: str = "qmf",
            maximize: bool = False) -> tuple[int, float]:
    """Dürr–Høyer minimum finding (maximum with ``maximize=True``).

    Idealized mode searches for items strictly below the current threshold
    in (value, index) order, which makes the lowest index win ties.
    Stochastic mode marks strictly smaller values only, so ties resolve
    uniformly.
    """
    if N < 1:
        raise InvalidParam("need at least one element")
    vals = np.array([value(i) for i in range(N)] if callable(value) else value, dtype=float)
    if vals.shape != (N,):
        raise InvalidParam("value table length does not match N")
    key = -vals if maximize else vals
    idx = np.arange(N)
    y = int(rng.integers(N))
    ledger.charge(name, unit[0], unit[1])
    while True:
        if cfg.idealized:
            mask = (key < key[y]) | ((key == key[y]) & (idx < y))
        else:
            mask = key < key[y]
        nxt = qsearch(mask, N, cfg, ledger, rng, unit=unit, name=name)
        if nxt is None:
            return y, float(vals[y])
        y = nxt


def qmf_k_types(value, type_of, N: int, k: int, cfg: SimConfig, ledger: QueryLedger,
                rng: np.random.Generator) -> set[tuple[int, float]]:
    """Per-type minima of the ``k`` types whose minima are smallest."""
    if k < 1:
        raise InvalidParam("k must be at least 1")
    best: dict = {}
    ties: dict = {}
    for i in range(N):
        v = float(value(i) if callable(value) else value[i])
        t = type_of(i) if callable(type_of) else type_of[i]
        if t not in best or v < best[t][1]:
            best[t] = (i, v)
            ties[t] = [i]
        elif v == best[t][1]:
            ties[t].append(i)
    if not cfg.idealized:
        for t, cands in ties.items():
            if len(cands) > 1:
                i = cands[int(rng.integers(len(cands)))]
                best[t] = (i, best[t][1])
    chosen = sorted(best.values(), key=lambda iv: (iv[1], iv[0]))[:k]
    q = math.ceil(cfg.const("qmf_k_types") * math.sqrt(k * N) * log2p1(N))
    ledger.charge("qmf_k_types", q)
    return set(chosen)


def qtf(pred: Predicate, N: int, t: int, cfg: SimConfig, ledger: QueryLedger,
        rng: np.random.Generator) -> QtfOutcome:
    """Threshold finding: certify at most ``t`` marked items and list them.

    Over-threshold inputs are reported FALSE, except that stochastic mode
    returns a spurious TRUE with a ``t``-subset with probability ``delta``.
    """
    if not 1 <= t <= N:
        raise InvalidThreshold(f"threshold t={t} outside [1, {N}]")
    marked = marked_indices(pred, N)
    q = math.ceil(cfg.const("qtf") * math.sqrt(t * N))
    ledger.charge("qtf", q, q * log2p1(N))
    if len(marked) <= t:
        return QtfOutcome(True, frozenset(int(i) for i in marked), t)
    if not cfg.idealized and rng.random() < cfg.delta:
        sub = rng.choice(marked, size=t, replace=False)
        return QtfOutcome(True, frozenset(int(i) for i in sub), t)
    return QtfOutcome(False, frozenset(), t)


def qbfs(g: Graph, v: int, cfg: SimConfig, ledger: QueryLedger) -> BfsResult:
    """Full BFS from ``v``; charged ``ceil(c * n * log2(n + 1))``."""
    if g.weighted:
        raise InvalidParam("qbfs needs an unweighted graph")
    res = bfs(g, v, ledger)
    ledger.charge("qbfs", qbfs_cost(g, cfg))
    return res


def qbfs_cost(g: Graph, cfg: SimConfig) -> int:
    return math.ceil(cfg.const("qbfs") * g.n * log2p1(g.n))


def qsssp_cost(g: Graph, cfg: SimConfig) -> int:
    return math.ceil(
        cfg.const("qsssp") * math.sqrt(g.n * g.m) * log2p1(g.n) ** cfg.sssp_polylog_exp
    )


def qsssp(g: Graph, v: int, cfg: SimConfig, ledger: QueryLedger, *,
          structural: bool = False, rng: Optional[np.random.Generator] = None) -> SsspResult:
    """Single-source shortest paths from ``v``.

    The default books ``ceil(c * sqrt(n m) * log2(n + 1) ** p)`` and answers
    with Dijkstra.  ``structural=True`` instead grows the shortest-path tree
    one vertex at a time, choosing each new vertex by simulated minimum
    finding over the frontier edge slots and booking those charges.
    """
    if not structural:
        res = dijkstra(g, v, ledger)
        ledger.charge("qsssp", qsssp_cost(g, cfg))
        return res
    if not is_connected(g):
        raise Disconnected()
    rng = rng if rng is not None else cfg.rng()
    n = g.n
    dist = [math.inf] * n
    parent = [-1] * n
    dist[v] = 0.0
    in_tree = [False] * n
    in_tree[v] = True
    tree = [v]
    for _ in range(n - 1):
        slots = []
        for u in tree:
            nb = g.neighbors(u)
            wt = g.weights(u)
            ledger.probe(len(nb))
            for i in range(len(nb)):
                if not in_tree[nb[i]]:
                    slots.append((dist[u] + wt[i], nb[i], u))
        slots.sort(key=lambda s: (s[1], s[2]))
        i, _ = qmf_min([s[0] for s in slots], len(slots), cfg, ledger, rng, name="qsssp")
        d, x, u = slots[i]
        dist[x] = d
        parent[x] = u
        in_tree[x] = True
        tree.append(x)
    return SsspResult(v, dist, parent)
