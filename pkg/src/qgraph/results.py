"""Result containers shared by the classical and simulated-quantum algorithms."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple, Optional, Sequence

import numpy as np

from .graph import Graph


@dataclass(frozen=True)
class PathResult:
    endpoints: tuple[int, int]
    total_weight: float
    vertices: tuple[int, ...]

    def to_dict(self) -> dict:
        return {
            "endpoints": list(self.endpoints),
            "total_weight": self.total_weight,
            "vertices": list(self.vertices),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "PathResult":
        return cls(tuple(d["endpoints"]), float(d["total_weight"]), tuple(d["vertices"]))


def path_weight(g: Graph, vertices: Sequence[int]) -> float:
    """Sum of edge weights along ``vertices``; raises KeyError on a non-edge."""
    total = 0.0
    for a, b in zip(vertices, vertices[1:]):
        total += g.weight(a, b)
    return total


def validate_path(g: Graph, path: PathResult, expected: float | None = None,
                  rel_tol: float = 1e-9) -> bool:
    """Check a witness: real edges, no repeats, weights summing to the claim."""
    vs = path.vertices
    if not vs or (vs[0], vs[-1]) != tuple(path.endpoints):
        return False
    if len(set(vs)) != len(vs):
        return False
    if any(not (0 <= v < g.n) for v in vs):
        return False
    try:
        total = path_weight(g, vs)
    except KeyError:
        return False
    if not math.isclose(total, path.total_weight, rel_tol=rel_tol, abs_tol=1e-12):
        return False
    if expected is not None and not math.isclose(total, expected, rel_tol=rel_tol, abs_tol=1e-12):
        return False
    return True


class SsspResult(NamedTuple):
    source: int
    dist: list[float]
    parent: list[int]
    exact: Optional[list] = None  # rational distances when float sums would tie

    def ranks(self) -> list[float]:
        """Distances replaced by their dense rank; same order, no rounding ties."""
        keys = self.exact if self.exact is not None else self.dist
        rank = {k: float(i) for i, k in enumerate(sorted(set(keys)))}
        return [rank[k] for k in keys]

    def path_to(self, t: int) -> list[int]:
        out = [t]
        while out[-1] != self.source:
            p = self.parent[out[-1]]
            if p < 0:
                raise ValueError(f"vertex {t} unreachable from {self.source}")
            out.append(p)
        out.reverse()
        return out

    def witness(self, t: int) -> PathResult:
        return PathResult((self.source, t), self.dist[t], tuple(self.path_to(t)))

    def farthest(self) -> int:
        """Farthest vertex, lowest index among ties."""
        keys = self.exact if self.exact is not None else self.dist
        best, arg = -1, self.source
        for v, d in enumerate(keys):
            if d > best:
                best, arg = d, v
        return arg

    def eccentricity(self) -> float:
        return max(self.dist)


class BfsResult(NamedTuple):
    levels: list[int]
    depth: int
    parent: list[int]
    order: list[int]


@dataclass(frozen=True)
class PartialBfsResult:
    source: int
    visited: tuple[int, ...]
    depth: float
    parent: dict[int, int]
    levels: dict[int, float] = field(default_factory=dict)


@dataclass(frozen=True)
class HittingSet:
    members: tuple[int, ...]
    s: int
    sample_const: float

    def __len__(self):
        return len(self.members)

    def __contains__(self, v):
        return v in set(self.members)


@dataclass
class MetricsReport:
    eccentricity: list[float]
    diameter: float
    radius: float
    diameter_witness: PathResult
    radius_witness: PathResult
    eccentricity_witness: list[PathResult]
    distances: np.ndarray

    def to_dict(self) -> dict:
        return {
            "eccentricity": list(self.eccentricity),
            "diameter": self.diameter,
            "radius": self.radius,
            "diameter_witness": self.diameter_witness.to_dict(),
            "radius_witness": self.radius_witness.to_dict(),
        }


@dataclass
class ApproxResult:
    estimate: float
    witness: PathResult
    w_vertex: int
    hitting_set: Optional[HittingSet]
    n_s_of_w: tuple[int, ...]
    probed: tuple[int, ...] = ()

    def to_dict(self) -> dict:
        return {
            "estimate": self.estimate,
            "witness": self.witness.to_dict(),
            "w_vertex": self.w_vertex,
            "hitting_set": list(self.hitting_set.members) if self.hitting_set else None,
            "n_s_of_w": list(self.n_s_of_w),
        }
