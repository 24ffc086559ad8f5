"""Packing and covering of Kuratowski subdivisions, with the exact engines behind them."""

from .errors import BudgetExceeded, GraphError, HypothesisViolation, ParseError
from .genus import (
    EmbeddingScheme,
    GenusReport,
    SurfaceSpec,
    can_draw,
    euler_genus_exact,
    genus_report,
    nonorientable_genus_connected,
    orientable_genus_exact,
    surface_catalog,
    surface_genus_at_most,
    trace_faces,
    verify_kuratowski_genus,
)
from .graph import Graph, Separation, disjoint_union, dump_graph, load_graph, load_graphs
from .hypergraph import (
    Hypergraph,
    PackCoverMetrics,
    ding_bound,
    lambda_exact,
    nu_exact,
    tau_exact,
    verify_ding_bound,
)
from .packing import (
    ApexCertificate,
    DualityReport,
    PackingCertificate,
    apex_to_genus,
    duality_report,
    enumerate_minimal_kgraphs,
    k_number,
    planar_deletion_set,
)
from .planarity import KGraphWitness, is_planar, kuratowski_witness, verify_kgraph_witness
from .society import (
    Cross,
    CrossConfig,
    Society,
    find_cross,
    is_rural,
    two_disjoint_paths,
    verify_cross_config_nonplanar,
)
from .tangles import Tangle, TangleResult, enumerate_separations, planar_side_tangle, verify_tangle_axioms

__version__ = "0.1.0"

__all__ = [
    "ApexCertificate",
    "BudgetExceeded",
    "Cross",
    "CrossConfig",
    "DualityReport",
    "EmbeddingScheme",
    "GenusReport",
    "Graph",
    "GraphError",
    "Hypergraph",
    "HypothesisViolation",
    "KGraphWitness",
    "PackCoverMetrics",
    "PackingCertificate",
    "ParseError",
    "Separation",
    "Society",
    "SurfaceSpec",
    "Tangle",
    "TangleResult",
    "apex_to_genus",
    "can_draw",
    "ding_bound",
    "disjoint_union",
    "duality_report",
    "dump_graph",
    "enumerate_minimal_kgraphs",
    "enumerate_separations",
    "euler_genus_exact",
    "find_cross",
    "genus_report",
    "is_planar",
    "is_rural",
    "k_number",
    "kuratowski_witness",
    "lambda_exact",
    "load_graph",
    "load_graphs",
    "nonorientable_genus_connected",
    "nu_exact",
    "orientable_genus_exact",
    "planar_deletion_set",
    "planar_side_tangle",
    "surface_catalog",
    "surface_genus_at_most",
    "tau_exact",
    "trace_faces",
    "two_disjoint_paths",
    "verify_cross_config_nonplanar",
    "verify_ding_bound",
    "verify_kgraph_witness",
    "verify_kuratowski_genus",
    "verify_tangle_axioms",
]

