import networkx as nx
import numpy as np
import pytest
from sklearn.base import clone

from qgraph.errors import Disconnected, GraphFormatError
from qgraph.estimators import ApproxDiameter, ExactMetrics, QuantumDiameter, QuantumEccentricity, QuantumRadius
from qgraph.graph import cycle_graph, path_graph, write_edge_list
from qgraph.validation import check_graph


def test_get_params_and_clone():
    est = QuantumDiameter(mode="stochastic", seed=4)
    params = est.get_params()
    assert params["mode"] == "stochastic" and params["seed"] == 4
    c = clone(est)
    assert c.get_params() == params and c is not est
    est.set_params(delta=0.2)
    assert est.delta == 0.2


def test_fit_attributes():
    est = QuantumDiameter().fit(path_graph(6))
    assert est.value_ == 5 and est.witness_.vertices == (0, 1, 2, 3, 4, 5)
    assert est.charged_queries_ > 0 and est.n_vertices_ == 6
    assert QuantumRadius().fit(path_graph(5)).value_ == 2
    assert QuantumEccentricity(source=2).fit(path_graph(5)).value_ == 2
    ex = ExactMetrics().fit(cycle_graph(7))
    assert (ex.diameter_, ex.radius_) == (3, 3)


@pytest.mark.parametrize("method", ["quantum", "rw", "acim"])
def test_approx(method):
    est = ApproxDiameter(method=method, s=4).fit(cycle_graph(12))
    assert 4 <= est.value_ <= 6


def test_input_forms(tmp_path):
    g = path_graph(4)
    p = tmp_path / "g.txt"
    write_edge_list(g, p)
    adj = nx.to_numpy_array(nx.path_graph(4))
    for X in (g, str(p), nx.path_graph(4), adj, [(0, 1), (1, 2), (2, 3)]):
        assert check_graph(X) == g
    with pytest.raises(GraphFormatError):
        check_graph(np.ones((2, 3)))
    with pytest.raises(GraphFormatError):
        check_graph(nx.DiGraph([(0, 1)]))
    with pytest.raises(Disconnected):
        QuantumDiameter().fit([(0, 1), (2, 3)])
