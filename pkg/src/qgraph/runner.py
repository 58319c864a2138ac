"""One entry point per algorithm id, shared by the CLI and the bench harness."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from . import classical, qmetrics
from .errors import InvalidArgs, InvalidParam
from .graph import Graph
from .ledger import QueryLedger, SimConfig, spawn
from .results import PathResult, validate_path

ALGORITHMS = ("ecc", "diameter", "radius", "approx-diameter", "acim", "rw", "brute", "qpbfs")


@dataclass
class RunOutcome:
    algorithm: str
    value: float
    witness: Optional[PathResult]
    ledger: QueryLedger
    extra: dict = field(default_factory=dict)


def run_algorithm(algorithm: str, g: Graph, cfg: SimConfig, *, source: int = 0,
                  s: Optional[int] = None, sample_const: float = 2.0) -> RunOutcome:
    """Run ``algorithm`` on ``g`` with a fresh ledger seeded from ``cfg.seed``.

    Witnesses are re-validated against ``g``; a mismatch raises ``RuntimeError``.
    """
    if algorithm not in ALGORITHMS:
        raise InvalidArgs(f"unknown algorithm {algorithm!r}; choose from {', '.join(ALGORITHMS)}")
    ledger = QueryLedger()
    rng = cfg.rng()
    extra: dict = {}
    witness = None
    if algorithm == "ecc":
        value, witness = qmetrics.q_eccentricity(g, source, cfg, ledger, rng)
        extra["source"] = source
    elif algorithm == "diameter":
        value, witness = qmetrics.q_diameter(g, cfg, ledger, rng)
    elif algorithm == "radius":
        value, witness = qmetrics.q_radius(g, cfg, ledger, rng)
    elif algorithm == "approx-diameter":
        res = qmetrics.q_approx_diameter(g, s, sample_const, cfg, ledger, rng)
        value, witness = res.estimate, res.witness
        extra.update(w_vertex=res.w_vertex, hitting_set_size=len(res.hitting_set))
    elif algorithm == "acim":
        res = classical.approx_diameter_acim(g, s or qmetrics.default_s(g.n), ledger)
        value, witness = res.estimate, res.witness
        extra.update(w_vertex=res.w_vertex, hitting_set_size=len(res.hitting_set))
    elif algorithm == "rw":
        res = classical.approx_diameter_rw(g, s or qmetrics.default_s(g.n), sample_const,
                                           spawn(rng), ledger)
        value, witness = res.estimate, res.witness
        extra.update(w_vertex=res.w_vertex, hitting_set_size=len(res.hitting_set))
    elif algorithm == "brute":
        rep = classical.exact_metrics_bruteforce(g, ledger)
        value, witness = rep.diameter, rep.diameter_witness
        extra["radius"] = rep.radius
    else:
        if s is None:
            raise InvalidParam("qpbfs needs s")
        res = qmetrics.q_partial_search(g, source, s, cfg, ledger, rng)
        value = res.depth
        extra.update(source=source, s=s, visited=len(res.visited))
    if witness is not None and not validate_path(g, witness, value):
        raise RuntimeError("witness path failed re-validation")
    return RunOutcome(algorithm, float(value), witness, ledger, extra)


def report_json(out: RunOutcome, cfg: SimConfig) -> dict:
    return {
        "schema": 1,
        "algorithm": out.algorithm,
        "value": out.value,
        "witness": out.witness.to_dict() if out.witness is not None else None,
        "ledger": out.ledger.to_dict(),
        "seed": cfg.seed,
        "config": cfg.to_dict(),
        **({"extra": out.extra} if out.extra else {}),
    }
