"""Path-length, path-breadth, bandwidth and line-distortion of graphs."""

from .atfree import (
    KkmStructure,
    LbfsOrder,
    ModelError,
    NotATFreeError,
    asteroidal_triple,
    atfree_decomposition,
    atfree_embedding,
    atfree_layout,
    convex_bipartite_decomposition,
    convex_bipartite_graph,
    is_at_free,
    kkm_layering_path,
    lbfs,
    permutation_decomposition,
    permutation_graph,
    trapezoid_decomposition,
    trapezoid_graph,
)
from .bandwidth import (
    CapExceededError,
    Layout,
    layout_bandwidth,
    layout_from_decomposition,
    layout_from_dominating_path,
    local_density_bound,
    min_bandwidth_layout,
)
from .decomposition import (
    InvalidDecompositionError,
    PathDecomposition,
    ValidationReport,
    decomposition_from_embedding,
    extended_layering,
    extended_layering_best,
    interval_completion,
    prune_bags,
    validate,
)
from .distortion import (
    ContractionError,
    LineEmbedding,
    canonic_embedding,
    embedding_distortion,
    embedding_from_dominating_path,
)
from .domination import (
    DominatingPair,
    DominatingPath,
    best_dominating_shortest_path,
    double_bfs_dominating_path,
    is_dominating_pair,
    min_dominating_pair,
)
from .generators import FamilySpec, generate
from .graph import (
    DisconnectedGraphError,
    Graph,
    GraphError,
    Layering,
    all_pairs_distances,
    bfs_layering,
    build_graph,
    disk_intercepts,
    graph_power,
)
from .oracle import (
    exact_bandwidth,
    exact_line_distortion,
    exact_path_breadth,
    exact_path_length,
    interval_closure,
    is_interval_ordering,
)
from .parsing import ParseError, parse_graph, parse_model, serialize_graph

__all__ = [name for name in dir() if not name.startswith("_")]
