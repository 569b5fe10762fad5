"""cliqueis: detect k-enabling and k-excluding vertices.

A vertex is k-enabling when it sits in both a clique of size k and an
independent set of size k; otherwise it is k-excluding.  The package
provides exact branch-and-bound oracles, exhaustive small-n tables for
k(n) and n(k), generators for the relevant graph families, bound
calculators, and a polynomial-time excluder that certifies which
requirement a vertex fails.
"""

from .almost import (
    AcceptableResult,
    AlmostStructure,
    EpsMSystem,
    check_almost,
    check_intersection_bound,
    find_acceptable_graph,
    find_acceptable_independent_set,
    max_clique_bound_in_almost_is,
    max_is_bound_in_almost_clique,
    system_size,
)
from .bounds import (
    ExcluderParams,
    BoundReport,
    derive_params,
    kj_sequence,
    min_order_lower_bound,
    msystem_size_lower,
    union_floor,
)
from .common import (
    CLIQUE,
    INDEPENDENT_SET,
    DivergenceSignal,
    GraphParseError,
    ParameterError,
)
from .enumeration import KTable, k_of_n_exhaustive, n_of_k_small
from .excluder import (
    ExclusionCertificate,
    InternalContradiction,
    SmallKFallback,
    find_excluding_poly,
    verify_certificate,
    verify_certificate_detail,
)
from .generators import (
    ClusterLayout,
    ReductionLayout,
    append_isolated,
    gen_4pd,
    gen_gnp,
    gen_hardness_reduction,
    gen_planted,
)
from .graph import Graph
from .oracle import (
    ClassificationReport,
    VertexClassification,
    classify_all,
    classify_vertex,
    has_clique_through,
    has_is_through,
    k_of_graph,
    max_clique,
    max_clique_through,
    max_independent_set,
    max_is_through,
)

__all__ = [
    "AcceptableResult",
    "AlmostStructure",
    "ClassificationReport",
    "ClusterLayout",
    "CLIQUE",
    "DivergenceSignal",
    "EpsMSystem",
    "ExcluderParams",
    "ExclusionCertificate",
    "Graph",
    "GraphParseError",
    "BoundReport",
    "INDEPENDENT_SET",
    "InternalContradiction",
    "KTable",
    "ParameterError",
    "ReductionLayout",
    "SmallKFallback",
    "VertexClassification",
    "append_isolated",
    "check_almost",
    "check_intersection_bound",
    "classify_all",
    "classify_vertex",
    "derive_params",
    "find_acceptable_graph",
    "find_acceptable_independent_set",
    "find_excluding_poly",
    "gen_4pd",
    "gen_gnp",
    "gen_hardness_reduction",
    "gen_planted",
    "has_clique_through",
    "has_is_through",
    "k_of_graph",
    "k_of_n_exhaustive",
    "kj_sequence",
    "max_clique",
    "max_clique_bound_in_almost_is",
    "max_clique_through",
    "max_independent_set",
    "max_is_bound_in_almost_clique",
    "max_is_through",
    "min_order_lower_bound",
    "msystem_size_lower",
    "n_of_k_small",
    "system_size",
    "union_floor",
    "verify_certificate",
    "verify_certificate_detail",
]

__version__ = "0.1.0"
