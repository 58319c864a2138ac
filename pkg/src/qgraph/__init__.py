"""Classical simulator for quantum diameter, radius and eccentricity algorithms
in the adjacency-list query model."""
from .classical import (
    approx_diameter_acim,
    approx_diameter_rw,
    bfs,
    dijkstra,
    exact_metrics_bruteforce,
    partial_bfs,
    sample_hitting_set,
)
from .errors import (
    Disconnected,
    GraphFormatError,
    IndexOutOfRange,
    InvalidArgs,
    InvalidEdgeCount,
    InvalidParam,
    InvalidThreshold,
    KindMismatch,
    QGraphError,
    TrivialGraph,
)
from .estimators import (
    ApproxDiameter,
    ExactMetrics,
    QuantumDiameter,
    QuantumEccentricity,
    QuantumRadius,
)
from .gadgets import (
    GadgetDescriptor,
    gen_dense_gadget,
    gen_radius_circle_gadget,
    gen_sparse_gadget,
    load_gadget,
    save_gadget,
    verify_reduction,
)
from .graph import (
    Graph,
    degree,
    gen_connected_random,
    gen_random_regular,
    oracle_query,
    parse_edge_list,
    read_edge_list,
    write_edge_list,
)
from .ledger import QueryLedger, SimConfig
from .qmetrics import q_approx_diameter, q_diameter, q_eccentricity, q_radius, qpbfs
from .qsim import qbfs, qmf_k_types, qmf_min, qsearch, qsssp, qtf
from .results import MetricsReport, PathResult, validate_path

__version__ = "0.1.0"
