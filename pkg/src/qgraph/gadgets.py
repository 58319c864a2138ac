"""Graphs from the minima-finding reduction and their verifiers.

Three constructions:

``sparse``  ``d`` columns of ``width`` vertices between a source ``s`` and a
            sink ``t``.  Consecutive columns are joined by complete bipartite
            "gaps" whose weights fall into disjoint ranges, decreasing away
            from ``s``.  The eccentricity of ``s`` is the sum of the per-gap
            minima, so computing it finds the minimum of every gap.
``dense``   a complete graph with a cheap Hamiltonian ``s``-``t`` path planted
            among heavy edges; the diameter is the planted path.
``circle``  the sparse layout with ``s`` and ``t`` merged into one hub, so the
            columns close into a ring.

Zero-weight edges of the construction are replaced by ``epsilon`` (weights
must be positive).  Edges into ``t`` get ``width * epsilon`` so that ``t``
stays the unique farthest vertex from ``s``.
"""
from __future__ import annotations

import json
import math
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Union

import numpy as np

from .errors import InvalidParam, KindMismatch
from .graph import Graph, format_edge_list, read_edge_list, write_edge_list
from .results import MetricsReport, PathResult, validate_path

SPARSE = "sparse"
DENSE = "dense"
CIRCLE = "circle"
KINDS = (SPARSE, DENSE, CIRCLE)

DEFAULT_EPSILON = 1e-9


@dataclass
class GadgetDescriptor:
    graph: Graph
    kind: str
    d: int
    width: int
    gap_minima: list[float] = field(default_factory=list)
    planted_path: list[int] = field(default_factory=list)
    s_vertex: int = 0
    t_vertex: int = 0
    epsilon: float = DEFAULT_EPSILON

    def columns(self) -> list[list[int]]:
        """Vertex ids per column (empty for the dense kind)."""
        if self.kind == DENSE:
            return []
        return [[1 + c * self.width + r for r in range(self.width)] for c in range(self.d)]

    def sidecar(self) -> dict:
        return {
            "kind": self.kind,
            "d": self.d,
            "width": self.width,
            "gap_minima": list(self.gap_minima),
            "planted_path": list(self.planted_path),
            "s": self.s_vertex,
            "t": self.t_vertex,
            "epsilon": self.epsilon,
        }


def _column_edges(d: int, width: int, eps: float) -> list[tuple[int, int, float]]:
    edges = []
    for c in range(d):
        base = 1 + c * width
        edges.extend((base + r, base + r + 1, eps) for r in range(width - 1))
    return edges


def _gap_edges(c: int, width: int, lo: float, rng: np.random.Generator):
    """Complete bipartite edges between column ``c`` and ``c + 1``, weights in ``[lo, 2 lo)``."""
    a, b = 1 + c * width, 1 + (c + 1) * width
    w = rng.uniform(lo, 2 * lo, size=(width, width))
    edges = [(a + i, b + j, float(w[i, j])) for i in range(width) for j in range(width)]
    return edges, float(w.min())


def gen_sparse_gadget(d: int, width: int = 3, seed: int = 0,
                      epsilon: float = DEFAULT_EPSILON) -> GadgetDescriptor:
    if d < 1 or width < 2:
        raise InvalidParam("sparse gadget needs d >= 1 and width >= 2")
    if not epsilon > 0:
        raise InvalidParam("epsilon must be positive")
    rng = np.random.default_rng(seed)
    n = d * width + 2
    s, t = 0, n - 1
    edges = _column_edges(d, width, epsilon)
    edges.extend((s, 1 + r, epsilon) for r in range(width))
    last = 1 + (d - 1) * width
    edges.extend((last + r, t, width * epsilon) for r in range(width))
    minima = []
    for c in range(d - 1):
        # gap c + 1 draws from [4^(d-c-1), 2 * 4^(d-c-1))
        gap, lo = _gap_edges(c, width, 4.0 ** (d - c - 1), rng)
        edges.extend(gap)
        minima.append(lo)
    return GadgetDescriptor(Graph(n, edges, weighted=True), SPARSE, d, width, minima,
                            [], s, t, epsilon)


def gen_dense_gadget(n: int, seed: int = 0, planted_weight: Optional[float] = None) -> GadgetDescriptor:
    """Complete graph with a planted Hamiltonian path of weights in ``[1, 2)``.

    Off-path edges weigh at least ``2n``, more than the whole planted path.
    """
    if n < 3:
        raise InvalidParam("dense gadget needs n >= 3")
    rng = np.random.default_rng(seed)
    perm = [int(x) for x in rng.permutation(n)]
    on_path = {}
    for a, b in zip(perm, perm[1:]):
        w = float(planted_weight) if planted_weight is not None else float(rng.uniform(1.0, 2.0))
        on_path[(min(a, b), max(a, b))] = w
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            w = on_path.get((u, v))
            if w is None:
                w = float(rng.uniform(2 * n, 2 * n + 1))
            edges.append((u, v, w))
    return GadgetDescriptor(Graph(n, edges, weighted=True), DENSE, n - 1, 1, [], perm,
                            perm[0], perm[-1], 0.0)


def _circle_exponent(c: int, d: int) -> int:
    """Range exponent for gap ``c`` (between columns ``c`` and ``c + 1``).

    Weights shrink moving away from the hub along either arm; the left arm
    uses even exponents and the right arm odd ones, so all ranges differ.
    """
    half = d // 2
    if c < half:
        return d - 2 * c
    r = d - 1 - c
    return d - 2 * r + 1


def gen_radius_circle_gadget(d: int, width: int = 2, seed: int = 0,
                             epsilon: float = DEFAULT_EPSILON) -> GadgetDescriptor:
    if d < 4 or d % 2 or width < 2:
        raise InvalidParam("circle gadget needs even d >= 4 and width >= 2")
    if not epsilon > 0:
        raise InvalidParam("epsilon must be positive")
    rng = np.random.default_rng(seed)
    n = d * width + 1
    hub = 0
    edges = _column_edges(d, width, epsilon)
    last = 1 + (d - 1) * width
    edges.extend((hub, 1 + r, epsilon) for r in range(width))
    edges.extend((hub, last + r, epsilon) for r in range(width))
    minima = []
    for c in range(d - 1):
        gap, lo = _gap_edges(c, width, 4.0 ** _circle_exponent(c, d), rng)
        edges.extend(gap)
        minima.append(lo)
    return GadgetDescriptor(Graph(n, edges, weighted=True), CIRCLE, d, width, minima,
                            [], hub, hub, epsilon)


# ---------------------------------------------------------------------------
# verification


def true_gap_minima(gd: GadgetDescriptor) -> list[float]:
    cols = gd.columns()
    out = []
    for c in range(len(cols) - 1):
        nxt = set(cols[c + 1])
        out.append(min(w for u in cols[c]
                       for x, w in zip(gd.graph.neighbors(u), gd.graph.weights(u)) if x in nxt))
    return out


def _slack(gd: GadgetDescriptor, value: float) -> float:
    return (gd.graph.n + 1) * gd.width * gd.epsilon + 1e-9 * abs(value)


def _crossings(gd: GadgetDescriptor, vertices) -> dict[int, list[float]]:
    """Gap index -> weights of the path edges crossing that gap."""
    col_of = {v: c for c, col in enumerate(gd.columns()) for v in col}
    out: dict[int, list[float]] = {}
    for a, b in zip(vertices, vertices[1:]):
        ca, cb = col_of.get(a), col_of.get(b)
        if ca is not None and cb is not None and abs(ca - cb) == 1:
            out.setdefault(min(ca, cb), []).append(gd.graph.weight(a, b))
    return out


def _unpack(gd: GadgetDescriptor, report) -> tuple[float, PathResult]:
    if isinstance(report, MetricsReport):
        if gd.kind == SPARSE:
            return report.eccentricity[gd.s_vertex], report.eccentricity_witness[gd.s_vertex]
        if gd.kind == DENSE:
            return report.diameter, report.diameter_witness
        return report.radius, report.radius_witness
    try:
        value, path = report
    except (TypeError, ValueError) as exc:
        raise KindMismatch("expected a MetricsReport or a (value, PathResult) pair") from exc
    if not isinstance(path, PathResult):
        raise KindMismatch("witness must be a PathResult")
    return float(value), path


def _arc_sums(minima: list[float]) -> list[float]:
    # ring of links: hub->col0 (0), the d - 1 gaps, col(d-1)->hub (0)
    links = [0.0, *minima, 0.0]
    L = len(links)
    sums = []
    for start in range(L):
        acc = 0.0
        for k in range(L):
            acc += links[(start + k) % L]
            sums.append(acc)
    return sums


def verify_reduction(gd: GadgetDescriptor, report) -> bool:
    """Check that a metric computed on ``gd.graph`` recovers the planted structure.

    ``report`` is a :class:`MetricsReport` or a ``(value, PathResult)`` pair
    produced by the matching algorithm (eccentricity of ``s`` for sparse,
    diameter for dense, radius for circle gadgets).
    """
    if gd.kind not in KINDS:
        raise KindMismatch(f"unknown gadget kind {gd.kind!r}")
    value, path = _unpack(gd, report)
    g = gd.graph
    if not validate_path(g, path, value):
        return False

    if gd.kind == DENSE:
        planted = list(gd.planted_path)
        if sorted(planted) != list(range(g.n)) or planted[0] != gd.s_vertex or planted[-1] != gd.t_vertex:
            return False
        vs = list(path.vertices)
        if vs != planted and vs != planted[::-1]:
            return False
        total = sum(g.weight(a, b) for a, b in zip(planted, planted[1:]))
        return math.isclose(value, total, rel_tol=1e-12, abs_tol=1e-12)

    recorded = [float(x) for x in gd.gap_minima]
    if recorded != true_gap_minima(gd):
        return False
    slack = _slack(gd, value)
    crossings = _crossings(gd, path.vertices)
    if any(len(ws) != 1 or ws[0] != recorded[c] for c, ws in crossings.items()):
        return False
    crossed_sum = sum(recorded[c] for c in crossings)
    if abs(value - crossed_sum) > slack:
        return False

    if gd.kind == SPARSE:
        if path.endpoints[0] != gd.s_vertex:
            return False
        if set(crossings) != set(range(gd.d - 1)):
            return False
        return abs(value - sum(recorded)) <= slack

    # circle: the radius must be a contiguous-arc sum of gap minima
    return any(abs(value - a) <= slack for a in _arc_sums(recorded))


# ---------------------------------------------------------------------------
# files: edge list plus JSON sidecar


def sidecar_path(path: Union[str, os.PathLike]) -> Path:
    return Path(path).with_suffix(".json")


def save_gadget(gd: GadgetDescriptor, path: Union[str, os.PathLike],
                sidecar: Union[str, os.PathLike, None] = None) -> Path:
    write_edge_list(gd.graph, path)
    side = Path(sidecar) if sidecar else sidecar_path(path)
    side.write_text(json.dumps(gd.sidecar(), indent=2) + "\n", encoding="utf-8")
    return side


def load_gadget(path: Union[str, os.PathLike],
                sidecar: Union[str, os.PathLike, None] = None) -> GadgetDescriptor:
    g = read_edge_list(path)
    side = Path(sidecar) if sidecar else sidecar_path(path)
    meta = json.loads(side.read_text(encoding="utf-8"))
    if meta.get("kind") not in KINDS:
        raise KindMismatch(f"unknown gadget kind {meta.get('kind')!r}")
    return GadgetDescriptor(
        graph=g,
        kind=meta["kind"],
        d=int(meta["d"]),
        width=int(meta["width"]),
        gap_minima=[float(x) for x in meta.get("gap_minima", [])],
        planted_path=[int(x) for x in meta.get("planted_path", [])],
        s_vertex=int(meta["s"]),
        t_vertex=int(meta["t"]),
        epsilon=float(meta.get("epsilon", DEFAULT_EPSILON)),
    )


def gadget_text(gd: GadgetDescriptor) -> tuple[str, str]:
    return format_edge_list(gd.graph), json.dumps(gd.sidecar(), indent=2) + "\n"
