"""Query accounting and simulation configuration.

Every simulated run owns one :class:`QueryLedger`.  It records two kinds of
cost side by side:

* ``oracle_queries`` counts the classical adjacency-list probes the simulator
  actually performed.
* ``charged_queries`` / ``charged_time`` are the quantum-model charges that
  each simulated subroutine books according to its query bound.

Randomness comes from numpy's PCG64 generator (64-bit state).  A run is
seeded once from ``SimConfig.seed``; nested subroutine invocations draw child
streams with :meth:`numpy.random.Generator.spawn`, in invocation order.
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from typing import Mapping

import numpy as np

from .errors import InvalidParam

IDEALIZED = "idealized"
STOCHASTIC = "stochastic"


@dataclass
class QueryLedger:
    oracle_queries: int = 0
    charged_queries: float = 0.0
    charged_time: float = 0.0
    per_subroutine: dict[str, list[float]] = field(default_factory=dict)

    def probe(self, count: int = 1) -> None:
        """Record ``count`` classical oracle probes."""
        if count < 0:
            raise ValueError("probe count must be non-negative")
        self.oracle_queries += count

    def charge(self, name: str, queries: float, time: float | None = None) -> None:
        """Book a quantum-model charge under subroutine ``name``.

        ``time`` defaults to ``queries`` (no extra polylog factor).
        """
        if time is None:
            time = queries
        if queries < 0 or time < 0:
            raise ValueError("charges must be non-negative")
        entry = self.per_subroutine.setdefault(name, [0.0, 0.0])
        entry[0] += queries
        entry[1] += time
        self.charged_queries += queries
        self.charged_time += time

    def absorb_probes(self, other: "QueryLedger") -> None:
        self.oracle_queries += other.oracle_queries

    def merge(self, other: "QueryLedger") -> None:
        """Add every counter of ``other`` into this ledger."""
        self.absorb_probes(other)
        for name, (q, t) in other.per_subroutine.items():
            self.charge(name, q, t)

    def to_dict(self) -> dict:
        return {
            "oracle_queries": self.oracle_queries,
            "charged_queries": self.charged_queries,
            "charged_time": self.charged_time,
            "per_subroutine": {
                k: {"charged_queries": v[0], "charged_time": v[1]}
                for k, v in sorted(self.per_subroutine.items())
            },
        }


@dataclass(frozen=True)
class SimConfig:
    """Fidelity mode and cost-model constants for the simulated subroutines.

    ``charge_const`` applies to every subroutine unless ``charge_overrides``
    names it explicitly.  Polylog factors use ``log2(n + 1)``.
    """

    fidelity: str = IDEALIZED
    delta: float = 0.1
    lam: float = 6 / 5
    qsearch_cutoff_const: float = 3.0
    sssp_polylog_exp: float = 1.5
    charge_const: float = 1.0
    charge_overrides: Mapping[str, float] = field(default_factory=dict)
    seed: int = 0

    def __post_init__(self):
        if self.fidelity not in (IDEALIZED, STOCHASTIC):
            raise InvalidParam(f"unknown fidelity mode {self.fidelity!r}")
        if not 0.0 <= self.delta <= 1.0:
            raise InvalidParam("delta must lie in [0, 1]")
        if not self.lam > 1.0:
            raise InvalidParam("lambda must exceed 1")
        if self.qsearch_cutoff_const <= 0 or self.charge_const <= 0:
            raise InvalidParam("cutoff and charge constants must be positive")
        if any(v <= 0 for v in self.charge_overrides.values()):
            raise InvalidParam("charge overrides must be positive")
        if not 0 <= self.seed < 2**64:
            raise InvalidParam("seed must be a 64-bit unsigned integer")

    @property
    def idealized(self) -> bool:
        return self.fidelity == IDEALIZED

    def const(self, name: str) -> float:
        return self.charge_overrides.get(name, self.charge_const)

    def rng(self) -> np.random.Generator:
        return np.random.default_rng(self.seed)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["charge_overrides"] = dict(self.charge_overrides)
        return d


def log2p1(x: float) -> float:
    return math.log2(x + 1)


def spawn(rng: np.random.Generator) -> np.random.Generator:
    """Child stream for one subroutine invocation."""
    return rng.spawn(1)[0]
