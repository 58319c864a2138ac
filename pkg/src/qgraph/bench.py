"""Seeded experiment sweeps, CSV output and scaling-model checks.

A sweep runs one algorithm over a list of size points, several trials each,
and compares the mean charged queries against a cost model.  The check is
"normalized ratio stability": ``charge / model(point)`` must vary by at most
a factor ``tolerance`` across the sweep.  A least-squares log-log slope is
reported alongside for reference.
"""
from __future__ import annotations

import csv
import io
import json
import math
import os
import time
from dataclasses import asdict, dataclass, field, replace
from typing import Callable, Optional, Sequence, Union

import numpy as np

from . import gadgets
from .errors import InvalidArgs
from .graph import Graph, gen_connected_random, gen_random_regular, read_edge_list
from .ledger import SimConfig
from .runner import ALGORITHMS, run_algorithm

CSV_COLUMNS = ("n", "m", "trial", "seed", "algorithm", "charged_queries", "charged_time",
               "oracle_queries", "value")

GENERATORS = ("er", "regular", "file", "sparse-gadget", "dense-gadget", "circle-gadget")


def _lg(x: float) -> float:
    return math.log2(x)


MODELS: dict[str, Callable[["SweepPoint"], float]] = {
    # full diameter / radius: n sqrt(m) log^(5/2) n
    "n_sqrt_m": lambda p: p.n * math.sqrt(p.m) * _lg(p.n) ** 2.5,
    # partial search of size s: s^(3/2) log(s + 1)
    "s_pow_1.5": lambda p: p.s ** 1.5 * math.log2(p.s + 1),
    # approximation: sqrt(m) n^(3/4) log^3 n
    "sqrt_m_n_0.75": lambda p: math.sqrt(p.m) * p.n ** 0.75 * _lg(p.n) ** 3,
    # single eccentricity: sqrt(n m) log^(3/2) n
    "sqrt_nm": lambda p: math.sqrt(p.n * p.m) * _lg(p.n) ** 1.5,
}

DEFAULT_MODEL = {
    "diameter": "n_sqrt_m",
    "radius": "n_sqrt_m",
    "ecc": "sqrt_nm",
    "qpbfs": "s_pow_1.5",
    "approx-diameter": "sqrt_m_n_0.75",
}


@dataclass(frozen=True)
class SweepPoint:
    n: int
    m: int
    s: Optional[int] = None
    d: Optional[int] = None
    width: Optional[int] = None


@dataclass
class ExperimentConfig:
    algorithm: str
    sweep: list[SweepPoint]
    trials: int = 1
    generator: str = "er"
    weights: str = "unit"
    graph_file: Optional[str] = None
    sim: SimConfig = field(default_factory=SimConfig)
    model: Optional[str] = None
    tolerance: float = 3.0
    sample_const: float = 2.0
    csv_path: Optional[str] = None
    report_path: Optional[str] = None

    def validate(self) -> None:
        if self.algorithm not in ALGORITHMS:
            raise InvalidArgs(f"unknown algorithm {self.algorithm!r}")
        if self.trials < 1:
            raise InvalidArgs("trials must be at least 1")
        if not self.sweep:
            raise InvalidArgs("sweep must not be empty")
        if self.generator not in GENERATORS:
            raise InvalidArgs(f"unknown generator {self.generator!r}")
        if self.generator == "file" and not (self.graph_file and os.path.isfile(self.graph_file)):
            raise InvalidArgs(f"graph file {self.graph_file!r} is not readable")
        model = self.model_name
        if model is not None and model not in MODELS:
            raise InvalidArgs(f"unknown model {model!r}")
        if not self.tolerance >= 1:
            raise InvalidArgs("tolerance must be at least 1")

    @property
    def model_name(self) -> Optional[str]:
        return self.model or DEFAULT_MODEL.get(self.algorithm)

    @classmethod
    def from_dict(cls, d: dict) -> "ExperimentConfig":
        d = dict(d)
        d["sweep"] = [SweepPoint(**p) for p in d.get("sweep", [])]
        if "sim" in d:
            d["sim"] = SimConfig(**d["sim"])
        return cls(**d)


@dataclass
class PointSummary:
    point: SweepPoint
    mean_charged: float
    std_charged: float
    mean_oracle: float
    std_oracle: float
    ratio: Optional[float] = None


@dataclass
class ScalingReport:
    algorithm: str
    model: Optional[str]
    points: list[PointSummary]
    slope: float
    ratio_spread: Optional[float]
    tolerance: float
    passed: Optional[bool]

    def to_dict(self) -> dict:
        return {
            "schema": 1,
            "algorithm": self.algorithm,
            "model": self.model,
            "points": [
                {**asdict(p.point), "mean_charged_queries": p.mean_charged,
                 "std_charged_queries": p.std_charged, "mean_oracle_queries": p.mean_oracle,
                 "std_oracle_queries": p.std_oracle, "ratio": p.ratio}
                for p in self.points
            ],
            "slope": self.slope,
            "ratio_spread": self.ratio_spread,
            "tolerance": self.tolerance,
            "passed": self.passed,
        }


def trial_seed(base: int, point: int, trial: int) -> int:
    return int(np.random.SeedSequence([base, point, trial]).generate_state(1, np.uint64)[0])


def build_graph(cfg: ExperimentConfig, p: SweepPoint, seed: int) -> Graph:
    gen = cfg.generator
    if gen == "er":
        return gen_connected_random(p.n, p.m, cfg.weights, seed)
    if gen == "regular":
        if (2 * p.m) % p.n:
            raise InvalidArgs(f"m={p.m} is not n * degree / 2 for n={p.n}")
        return gen_random_regular(p.n, 2 * p.m // p.n, seed)
    if gen == "file":
        return read_edge_list(cfg.graph_file)
    if gen == "sparse-gadget":
        return gadgets.gen_sparse_gadget(p.d, p.width or 3, seed).graph
    if gen == "dense-gadget":
        return gadgets.gen_dense_gadget(p.n, seed).graph
    return gadgets.gen_radius_circle_gadget(p.d, p.width or 2, seed).graph


def run_sweep(cfg: ExperimentConfig) -> tuple[list[dict], ScalingReport]:
    """Run every (point, trial) in order and summarize.

    Rows are written to ``cfg.csv_path`` as they complete so that a failing
    run leaves the finished rows on disk.
    """
    cfg.validate()
    rows: list[dict] = []
    fh = open(cfg.csv_path, "w", newline="", encoding="utf-8") if cfg.csv_path else None
    try:
        writer = None
        if fh is not None:
            fh.write(f"# generated {time.strftime('%Y-%m-%dT%H:%M:%S')}\n")
            writer = csv.DictWriter(fh, fieldnames=CSV_COLUMNS)
            writer.writeheader()
        for pi, p in enumerate(cfg.sweep):
            for trial in range(cfg.trials):
                seed = trial_seed(cfg.sim.seed, pi, trial)
                g = build_graph(cfg, p, seed)
                out = run_algorithm(cfg.algorithm, g, replace(cfg.sim, seed=seed),
                                    s=p.s, sample_const=cfg.sample_const)
                row = {
                    "n": g.n, "m": g.m, "trial": trial, "seed": seed,
                    "algorithm": cfg.algorithm,
                    "charged_queries": out.ledger.charged_queries,
                    "charged_time": out.ledger.charged_time,
                    "oracle_queries": out.ledger.oracle_queries,
                    "value": out.value,
                }
                rows.append(row)
                if writer is not None:
                    writer.writerow(row)
                    fh.flush()
    finally:
        if fh is not None:
            fh.close()
    report = summarize(cfg, rows)
    if cfg.report_path:
        with open(cfg.report_path, "w", encoding="utf-8") as f:
            json.dump(report.to_dict(), f, indent=2)
            f.write("\n")
    return rows, report


def fit_slope(x: Sequence[float], y: Sequence[float]) -> float:
    """Least-squares slope of ``log y`` against ``log x`` (nan for one point)."""
    if len(x) < 2 or len(set(x)) < 2:
        return float("nan")
    return float(np.polyfit(np.log(x), np.log(y), 1)[0])


def summarize(cfg: ExperimentConfig, rows: list[dict]) -> ScalingReport:
    model_name = cfg.model_name
    model = MODELS.get(model_name) if model_name else None
    points = []
    for pi, p in enumerate(cfg.sweep):
        chunk = rows[pi * cfg.trials:(pi + 1) * cfg.trials]
        cq = np.array([r["charged_queries"] for r in chunk], dtype=float)
        oq = np.array([r["oracle_queries"] for r in chunk], dtype=float)
        # the realized graph fixes n and m (gadgets and files ignore the point's n, m)
        actual = replace(p, n=chunk[0]["n"], m=chunk[0]["m"])
        ratio = float(cq.mean() / model(actual)) if model else None
        points.append(PointSummary(actual, float(cq.mean()), float(cq.std()),
                                   float(oq.mean()), float(oq.std()), ratio))
    xs = [(pt.point.s if model_name == "s_pow_1.5" else pt.point.n) for pt in points]
    slope = fit_slope(xs, [pt.mean_charged for pt in points])
    spread = passed = None
    if model:
        ratios = [pt.ratio for pt in points]
        spread = max(ratios) / min(ratios)
        passed = spread <= cfg.tolerance
    return ScalingReport(cfg.algorithm, model_name, points, slope, spread, cfg.tolerance, passed)


def rows_to_csv(rows: list[dict]) -> str:
    """CSV body without the timestamp line (used for determinism checks)."""
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=CSV_COLUMNS)
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue()


def parse_sweep(text: str) -> list[SweepPoint]:
    """``"128:512,256:1024"`` -> points; a third field sets ``s``."""
    out = []
    for item in filter(None, (t.strip() for t in text.split(","))):
        parts = item.split(":")
        try:
            nums = [int(x) for x in parts]
        except ValueError as exc:
            raise InvalidArgs(f"bad sweep entry {item!r}") from exc
        if len(nums) == 2:
            out.append(SweepPoint(nums[0], nums[1]))
        elif len(nums) == 3:
            out.append(SweepPoint(nums[0], nums[1], s=nums[2]))
        else:
            raise InvalidArgs(f"bad sweep entry {item!r}; use n:m or n:m:s")
    return out


def load_config(path: Union[str, os.PathLike]) -> ExperimentConfig:
    with open(path, encoding="utf-8") as f:
        return ExperimentConfig.from_dict(json.load(f))
