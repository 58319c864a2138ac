"""Input checks shared by the estimators and the public entry points."""
from __future__ import annotations

import os
from typing import Any

import networkx as nx
import numpy as np

from .errors import Disconnected, GraphFormatError, InvalidParam
from .graph import Graph, from_edges, is_connected, read_edge_list
from .ledger import SimConfig


def check_graph(X: Any) -> Graph:
    """Coerce ``X`` to a :class:`Graph`.

    Accepts a Graph, an edge-list file path, a networkx graph, a square
    numpy/scipy adjacency matrix (nonzero entries are edge weights) or a
    sequence of ``(u, v[, w])`` tuples.
    """
    if isinstance(X, Graph):
        return X
    if isinstance(X, (str, os.PathLike)):
        return read_edge_list(X)
    if isinstance(X, nx.Graph):
        if X.is_directed() or X.is_multigraph():
            raise GraphFormatError("need a simple undirected graph")
        nodes = sorted(X.nodes)
        if nodes != list(range(len(nodes))):
            raise GraphFormatError("networkx nodes must be labelled 0..n-1")
        return from_edges(len(nodes), [(u, v, d.get("weight", 1.0)) for u, v, d in X.edges(data=True)])
    if hasattr(X, "tocoo"):
        X = X.toarray()
    if isinstance(X, np.ndarray):
        if X.ndim != 2 or X.shape[0] != X.shape[1]:
            raise GraphFormatError("adjacency matrix must be square")
        if not np.array_equal(X, X.T):
            raise GraphFormatError("adjacency matrix must be symmetric")
        iu, ju = np.nonzero(np.triu(X, 1))
        return from_edges(X.shape[0], [(int(i), int(j), float(X[i, j])) for i, j in zip(iu, ju)])
    try:
        edges = list(X)
    except TypeError as exc:
        raise GraphFormatError(f"cannot build a graph from {type(X).__name__}") from exc
    n = 1 + max((max(int(e[0]), int(e[1])) for e in edges), default=0)
    return from_edges(n, edges)


def check_connected(g: Graph) -> Graph:
    if not is_connected(g):
        raise Disconnected()
    return g


def check_vertex(g: Graph, v: int) -> int:
    v = int(v)
    if not 0 <= v < g.n:
        raise InvalidParam(f"vertex {v} not in [0, {g.n})")
    return v


def check_sim_config(mode: str, delta: float, seed: int, **kw) -> SimConfig:
    return SimConfig(fidelity=mode, delta=delta, seed=seed, **kw)
