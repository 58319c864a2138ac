"""scikit-learn style wrappers.

``fit(X)`` takes one graph (see :func:`qgraph.validation.check_graph` for the
accepted forms) and stores results in trailing-underscore attributes;
``get_params``/``set_params`` come from :class:`sklearn.base.BaseEstimator`.
"""
from __future__ import annotations

from typing import Optional

from sklearn.base import BaseEstimator

from . import classical, qmetrics
from .ledger import QueryLedger
from .validation import check_connected, check_graph, check_sim_config, check_vertex


class _SimulatedMetric(BaseEstimator):
    def _config(self):
        return check_sim_config(self.mode, self.delta, self.seed,
                                charge_const=self.charge_const,
                                sssp_polylog_exp=self.sssp_polylog_exp)

    def _prepare(self, X):
        g = check_connected(check_graph(X))
        self.n_vertices_, self.n_edges_ = g.n, g.m
        self.ledger_ = QueryLedger()
        return g, self._config()

    def _store(self, value, path):
        self.value_ = value
        self.witness_ = path
        self.charged_queries_ = self.ledger_.charged_queries
        self.oracle_queries_ = self.ledger_.oracle_queries
        return self


class QuantumEccentricity(_SimulatedMetric):
    def __init__(self, source: int = 0, method: str = "sssp", mode: str = "idealized",
                 delta: float = 0.1, seed: int = 0, charge_const: float = 1.0,
                 sssp_polylog_exp: float = 1.5):
        self.source = source
        self.method = method
        self.mode = mode
        self.delta = delta
        self.seed = seed
        self.charge_const = charge_const
        self.sssp_polylog_exp = sssp_polylog_exp

    def fit(self, X, y=None):
        g, cfg = self._prepare(X)
        v = check_vertex(g, self.source)
        return self._store(*qmetrics.q_eccentricity(g, v, cfg, self.ledger_, method=self.method))


class QuantumDiameter(_SimulatedMetric):
    def __init__(self, mode: str = "idealized", delta: float = 0.1, seed: int = 0,
                 charge_const: float = 1.0, sssp_polylog_exp: float = 1.5):
        self.mode = mode
        self.delta = delta
        self.seed = seed
        self.charge_const = charge_const
        self.sssp_polylog_exp = sssp_polylog_exp

    def fit(self, X, y=None):
        g, cfg = self._prepare(X)
        return self._store(*qmetrics.q_diameter(g, cfg, self.ledger_))


class QuantumRadius(QuantumDiameter):
    def fit(self, X, y=None):
        g, cfg = self._prepare(X)
        return self._store(*qmetrics.q_radius(g, cfg, self.ledger_))


class ApproxDiameter(_SimulatedMetric):
    """2/3-approximate diameter; ``method`` is ``"quantum"``, ``"rw"`` or ``"acim"``."""

    def __init__(self, s: Optional[int] = None, sample_const: float = 2.0, method: str = "quantum",
                 mode: str = "idealized", delta: float = 0.1, seed: int = 0,
                 charge_const: float = 1.0, sssp_polylog_exp: float = 1.5):
        self.s = s
        self.sample_const = sample_const
        self.method = method
        self.mode = mode
        self.delta = delta
        self.seed = seed
        self.charge_const = charge_const
        self.sssp_polylog_exp = sssp_polylog_exp

    def fit(self, X, y=None):
        g, cfg = self._prepare(X)
        s = self.s if self.s is not None else qmetrics.default_s(g.n)
        if self.method == "quantum":
            res = qmetrics.q_approx_diameter(g, s, self.sample_const, cfg, self.ledger_)
        elif self.method == "rw":
            res = classical.approx_diameter_rw(g, s, self.sample_const, cfg.rng(), self.ledger_)
        elif self.method == "acim":
            res = classical.approx_diameter_acim(g, s, self.ledger_)
        else:
            raise ValueError(f"unknown method {self.method!r}")
        self.result_ = res
        self.w_vertex_ = res.w_vertex
        return self._store(res.estimate, res.witness)


class ExactMetrics(BaseEstimator):
    """Brute-force eccentricities, diameter and radius."""

    def fit(self, X, y=None):
        g = check_connected(check_graph(X))
        self.ledger_ = QueryLedger()
        self.report_ = classical.exact_metrics_bruteforce(g, self.ledger_)
        self.eccentricity_ = list(self.report_.eccentricity)
        self.diameter_ = self.report_.diameter
        self.radius_ = self.report_.radius
        return self
