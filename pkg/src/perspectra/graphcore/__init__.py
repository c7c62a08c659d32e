from .graph import (
    MAX_VERTICES,
    Graph,
    GraphError,
    RootedGraph,
    RootedTreeSpec,
    add_pendant,
    build_rooted_tree,
    coalesce,
    complete,
    complete_bipartite,
    cycle,
    delete_vertices,
    g8,
    g11,
    is_bipartite,
    make_named,
    parse_family,
    path,
    star,
    subdivide_edge,
    theta,
)
from .cycles import ThetaWitness, contains_even_subdivision_k23, cycle_masks_through, cycles_through
from .graph6 import Graph6Error, graph6_decode, graph6_encode, read_graph6_stream
from .canon import canonical_form, enumerate_connected_bipartite

__all__ = [
    "MAX_VERTICES", "Graph", "GraphError", "RootedGraph", "RootedTreeSpec",
    "add_pendant", "build_rooted_tree", "coalesce", "complete", "complete_bipartite",
    "cycle", "delete_vertices", "g8", "g11", "is_bipartite", "make_named",
    "parse_family", "path", "star", "subdivide_edge", "theta",
    "ThetaWitness", "contains_even_subdivision_k23", "cycle_masks_through", "cycles_through",
    "Graph6Error", "graph6_decode", "graph6_encode", "read_graph6_stream",
    "canonical_form", "enumerate_connected_bipartite",
]
