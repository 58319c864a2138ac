"""Undirected weighted graphs in adjacency-list form and the query oracle."""
from __future__ import annotations

import heapq
import math
import os
from collections import deque
from typing import Iterable, Sequence

import numpy as np

from .errors import GraphFormatError, IndexOutOfRange, InvalidEdgeCount, InvalidParam
from .ledger import QueryLedger


class Graph:
    """Immutable simple undirected graph with positive edge weights.

    Neighbor lists are sorted by ascending neighbor id, which fixes the
    numbering ``f_v(i)`` used by the oracle.  Unweighted graphs store weight
    1.0 on every edge.
    """

    __slots__ = ("_n", "_m", "_nbrs", "_wts", "_weighted", "_adjacency", "_csr", "_exact")

    def __init__(self, n: int, edges: Iterable[tuple[int, int, float]], weighted: bool | None = None):
        n = int(n)
        if n < 1:
            raise InvalidParam("graph needs at least one vertex")
        rows: list[dict[int, float]] = [dict() for _ in range(n)]
        m = 0
        all_unit = True
        for u, v, *rest in edges:
            u, v = int(u), int(v)
            w = float(rest[0]) if rest else 1.0
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"edge ({u}, {v}) references a vertex outside [0, {n})")
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}")
            if not (math.isfinite(w) and w > 0):
                raise GraphFormatError(f"edge ({u}, {v}) has non-positive or non-finite weight {w}")
            if v in rows[u]:
                if rows[u][v] != w:
                    raise GraphFormatError(f"asymmetric weights on edge ({u}, {v})")
                raise GraphFormatError(f"duplicate edge ({u}, {v})")
            rows[u][v] = w
            rows[v][u] = w
            all_unit = all_unit and w == 1.0
            m += 1
        if weighted is None:
            weighted = not all_unit
        elif not weighted and not all_unit:
            raise GraphFormatError("unweighted graph must carry weight 1 on every edge")
        self._n = n
        self._m = m
        self._weighted = bool(weighted)
        self._nbrs = []
        self._wts = []
        for row in rows:
            keys = sorted(row)
            self._nbrs.append(keys)
            self._wts.append([row[k] for k in keys])
        self._adjacency = None
        self._csr = None
        self._exact = None

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return self._m

    @property
    def weighted(self) -> bool:
        return self._weighted

    @property
    def adjacency(self) -> tuple[tuple[tuple[int, float], ...], ...]:
        if self._adjacency is None:
            self._adjacency = tuple(
                tuple(zip(nb, wt)) for nb, wt in zip(self._nbrs, self._wts)
            )
        return self._adjacency

    @property
    def needs_exact_sums(self) -> bool:
        """True when the weight range exceeds what double-precision path sums resolve."""
        if self._exact is None:
            ws = [w for row in self._wts for w in row]
            self._exact = bool(ws) and max(ws) / min(ws) > 2.0 ** 50
        return self._exact

    def csr(self):
        """Symmetric scipy CSR weight matrix (cached)."""
        if self._csr is None:
            from scipy.sparse import csr_matrix

            indptr = np.zeros(self._n + 1, dtype=np.int64)
            indptr[1:] = np.cumsum([len(nb) for nb in self._nbrs])
            indices = np.fromiter((x for nb in self._nbrs for x in nb), dtype=np.int32, count=2 * self._m)
            data = np.fromiter((w for wt in self._wts for w in wt), dtype=float, count=2 * self._m)
            self._csr = csr_matrix((data, indices, indptr), shape=(self._n, self._n))
        return self._csr

    def neighbors(self, v: int) -> list[int]:
        """Neighbor ids of ``v`` (ascending).  Returned list must not be mutated."""
        return self._nbrs[v]

    def weights(self, v: int) -> list[float]:
        return self._wts[v]

    def weight(self, u: int, v: int) -> float:
        nb = self._nbrs[u]
        i = _bisect(nb, v)
        if i < len(nb) and nb[i] == v:
            return self._wts[u][i]
        raise KeyError((u, v))

    def has_edge(self, u: int, v: int) -> bool:
        nb = self._nbrs[u]
        i = _bisect(nb, v)
        return i < len(nb) and nb[i] == v

    def edges(self) -> list[tuple[int, int, float]]:
        """Each edge once as ``(u, v, w)`` with ``u < v``, sorted."""
        return [
            (u, v, w)
            for u in range(self._n)
            for v, w in zip(self._nbrs[u], self._wts[u])
            if u < v
        ]

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self._n == other._n
            and self._weighted == other._weighted
            and self._nbrs == other._nbrs
            and self._wts == other._wts
        )

    def __hash__(self):
        return hash((self._n, self._m, tuple(map(tuple, self._nbrs))))

    def __repr__(self):
        kind = "weighted" if self._weighted else "unweighted"
        return f"Graph(n={self._n}, m={self._m}, {kind})"


def _bisect(a: list[int], x: int) -> int:
    lo, hi = 0, len(a)
    while lo < hi:
        mid = (lo + hi) // 2
        if a[mid] < x:
            lo = mid + 1
        else:
            hi = mid
    return lo


def oracle_query(g: Graph, v: int, i: int, ledger: QueryLedger) -> tuple[int, float]:
    """Return the ``i``-th neighbor of ``v`` and the edge weight; one probe."""
    if not 0 <= v < g.n:
        raise IndexOutOfRange(f"vertex {v} not in [0, {g.n})")
    nb = g.neighbors(v)
    if not 0 <= i < len(nb):
        raise IndexOutOfRange(f"index {i} out of range for vertex {v} of degree {len(nb)}")
    ledger.probe()
    return nb[i], g.weights(v)[i]


def degree(g: Graph, v: int) -> int:
    """Degree of ``v``.  Degrees are given by the access model and cost nothing."""
    if not 0 <= v < g.n:
        raise IndexOutOfRange(f"vertex {v} not in [0, {g.n})")
    return len(g.neighbors(v))


def is_connected(g: Graph) -> bool:
    seen = [False] * g.n
    seen[0] = True
    queue = deque([0])
    count = 1
    while queue:
        u = queue.popleft()
        for v in g.neighbors(u):
            if not seen[v]:
                seen[v] = True
                count += 1
                queue.append(v)
    return count == g.n


# ---------------------------------------------------------------------------
# generators


def _weight_sampler(weight_mode, rng: np.random.Generator):
    if weight_mode in (None, "unit"):
        return None
    if isinstance(weight_mode, str) and weight_mode.startswith("uniform"):
        # "uniform:lo:hi"
        parts = weight_mode.split(":")
        lo, hi = (float(parts[1]), float(parts[2])) if len(parts) == 3 else (1.0, 10.0)
    else:
        kind, lo, hi = weight_mode
        if kind != "uniform":
            raise InvalidParam(f"unknown weight mode {weight_mode!r}")
    if not 0 < lo < hi:
        raise InvalidParam("uniform weights need 0 < lo < hi")
    return lambda: float(rng.uniform(lo, hi))


def random_tree_edges(n: int, rng: np.random.Generator) -> list[tuple[int, int]]:
    """Uniform random labelled tree on ``n`` vertices via a Prüfer sequence."""
    if n == 1:
        return []
    if n == 2:
        return [(0, 1)]
    seq = rng.integers(0, n, size=n - 2).tolist()
    deg = [1] * n
    for x in seq:
        deg[x] += 1
    leaves = [i for i in range(n) if deg[i] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        deg[x] -= 1
        if deg[x] == 1:
            heapq.heappush(leaves, x)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append((u, v))
    return edges


def gen_connected_random(n: int, m: int, weight_mode="unit", seed: int = 0) -> Graph:
    """Connected simple graph: uniform spanning tree plus random extra edges.

    ``weight_mode`` is ``"unit"`` or ``("uniform", lo, hi)`` (also accepted
    as the string ``"uniform:lo:hi"``).
    """
    n, m = int(n), int(m)
    if n < 1:
        raise InvalidEdgeCount("n must be at least 1")
    max_m = n * (n - 1) // 2
    if not n - 1 <= m <= max_m:
        raise InvalidEdgeCount(f"m={m} outside [{n - 1}, {max_m}] for n={n}")
    rng = np.random.default_rng(seed)
    tree = random_tree_edges(n, rng)
    present = {(min(u, v), max(u, v)) for u, v in tree}
    extra = m - (n - 1)
    if extra > (max_m - len(present)) // 2:
        # dense: sample from the explicit complement
        rest = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in present]
        pick = rng.choice(len(rest), size=extra, replace=False)
        present.update(rest[i] for i in sorted(pick.tolist()))
    else:
        while extra:
            u, v = rng.integers(0, n, size=2).tolist()
            if u == v:
                continue
            e = (min(u, v), max(u, v))
            if e not in present:
                present.add(e)
                extra -= 1
    sampler = _weight_sampler(weight_mode, rng)
    edges = sorted(present)
    if sampler is None:
        return Graph(n, [(u, v, 1.0) for u, v in edges], weighted=False)
    return Graph(n, [(u, v, sampler()) for u, v in edges], weighted=True)


def gen_random_regular(n: int, d: int, seed: int = 0, max_tries: int = 100) -> Graph:
    """Connected random ``d``-regular unweighted graph."""
    import networkx as nx

    if d >= n or (n * d) % 2:
        raise InvalidParam(f"no {d}-regular graph on {n} vertices")
    rng = np.random.default_rng(seed)
    for _ in range(max_tries):
        h = nx.random_regular_graph(d, n, seed=int(rng.integers(2**31)))
        if nx.is_connected(h):
            return Graph(n, [(u, v, 1.0) for u, v in h.edges()], weighted=False)
    raise InvalidParam(f"could not draw a connected {d}-regular graph on {n} vertices")


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1, 1.0) for i in range(n - 1)], weighted=False)


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n, 1.0) for i in range(n)], weighted=False)


def star_graph(leaves: int) -> Graph:
    """Star with center 0 and leaves ``1..leaves``."""
    return Graph(leaves + 1, [(0, i, 1.0) for i in range(1, leaves + 1)], weighted=False)


def complete_graph(n: int) -> Graph:
    return Graph(n, [(u, v, 1.0) for u in range(n) for v in range(u + 1, n)], weighted=False)


# ---------------------------------------------------------------------------
# edge-list files
#
#   p <n> <m> <weighted|unweighted>
#   u v w        (m lines, 0-based ids, weight column always present)


def format_edge_list(g: Graph) -> str:
    lines = [f"p {g.n} {g.m} {'weighted' if g.weighted else 'unweighted'}"]
    for u, v, w in g.edges():
        lines.append(f"{u} {v} {_fmt_weight(w)}")
    return "\n".join(lines) + "\n"


def _fmt_weight(w: float) -> str:
    if w == int(w) and abs(w) < 2**53:
        return str(int(w))
    return repr(w)


def parse_edge_list(text: str) -> Graph:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith(("#", "c "))]
    if not lines:
        raise GraphFormatError("empty edge list")
    head = lines[0].split()
    if len(head) != 4 or head[0] != "p" or head[3] not in ("weighted", "unweighted"):
        raise GraphFormatError(f"bad header line {lines[0]!r}")
    try:
        n, m = int(head[1]), int(head[2])
    except ValueError as exc:
        raise GraphFormatError(f"bad header line {lines[0]!r}") from exc
    body = lines[1:]
    if len(body) != m:
        raise GraphFormatError(f"header declares {m} edges but {len(body)} edge lines follow")
    edges = []
    for ln in body:
        parts = ln.split()
        if len(parts) != 3:
            raise GraphFormatError(f"edge line needs 'u v w': {ln!r}")
        try:
            edges.append((int(parts[0]), int(parts[1]), float(parts[2])))
        except ValueError as exc:
            raise GraphFormatError(f"bad edge line {ln!r}") from exc
    return Graph(n, edges, weighted=head[3] == "weighted")


def read_edge_list(path: str | os.PathLike) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def write_edge_list(g: Graph, path: str | os.PathLike) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_edge_list(g))


def from_edges(n: int, edges: Sequence[tuple], weighted: bool | None = None) -> Graph:
    return Graph(n, edges, weighted=weighted)
