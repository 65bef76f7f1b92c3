"""Metric dimension of vertex- and edge-amalgamations of graphs."""

from .amalgam import AmalgamResult, TerminalSpec, edge_amal, vertex_amal, witness_r
from .graph import (
    DistanceMatrix,
    Graph,
    bfs_distances,
    disjoint_union,
    distance_matrix,
    from_edge_list,
    identify_vertices,
    is_connected,
)
from .resolver import (
    ResolvingResult,
    TwinPartition,
    exact_metric_dimension,
    greedy_resolving_set,
    is_resolving,
    representation,
    twin_classes,
    twin_lower_bound,
)

__all__ = [
    "AmalgamResult", "DistanceMatrix", "Graph", "ResolvingResult", "TerminalSpec",
    "TwinPartition", "bfs_distances", "disjoint_union", "distance_matrix", "edge_amal",
    "exact_metric_dimension", "from_edge_list", "greedy_resolving_set", "identify_vertices",
    "is_connected", "is_resolving", "representation", "twin_classes", "twin_lower_bound",
    "vertex_amal", "witness_r",
]
