"""farhyp: far-apart pair enumeration and memory-lean Gromov hyperbolicity."""

from .graph import (
    Graph,
    DistanceVector,
    EccVector,
    INF_DIST,
    ParseError,
    bfs,
    pruned_bfs,
    parse_edge_list,
    write_edge_list,
    from_edges,
    biconnected_components,
    largest_biconnected_component,
)
from .eccentricity import all_eccentricities, diameter, radius
from .farpairs import FarApartStore, FarPair, far_sets_from_distances, vertices_at_distance_at_least
from .hyperbolicity import HyperbolicityOptions, HyperbolicityReport, delta4_doubled, run

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "DistanceVector",
    "EccVector",
    "INF_DIST",
    "ParseError",
    "bfs",
    "pruned_bfs",
    "parse_edge_list",
    "write_edge_list",
    "from_edges",
    "biconnected_components",
    "largest_biconnected_component",
    "all_eccentricities",
    "diameter",
    "radius",
    "FarApartStore",
    "FarPair",
    "far_sets_from_distances",
    "vertices_at_distance_at_least",
    "HyperbolicityOptions",
    "HyperbolicityReport",
    "delta4_doubled",
    "run",
]
