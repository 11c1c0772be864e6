"""Strong edge-coloring of k-degenerate multigraphs via special-edge orderings."""

__version__ = "0.1.0"

from .coloring import (
    AuditRecord,
    ColorReport,
    StrongColoring,
    audit,
    bound,
    color_graph,
    greedy_color,
    verify_strong_coloring,
)
from .estimator import EdgeColorEncoder, ExactStrongColoring, StrongEdgeColoring, check_graph
from .exact import ExactResult, exact_chi_s, sandwich_check
from .generators import GenSpec, generate, petersen, saturate_k
from .graph import (
    EdgeSubset,
    GraphError,
    GraphFormatError,
    MultiGraph,
    conflict_set,
    degree,
    format_graph,
    max_degree,
    parse_graph,
    restricted_degree,
)
from .ordering import (
    DegeneracyCertificate,
    EdgeOrdering,
    NotKDegenerateError,
    build_ordering,
    degeneracy,
    find_special_edge,
    is_special_vertex,
    verify_ordering,
)
