"""Exact nested chromatic numbers of finite simple graphs."""

from .graph import (
    DedupMapping, Graph, GraphError, are_duplicates, build_graph, closed_neighbourhood,
    complement, components, dedup, delete_vertex, girth, induced_subgraph, is_bipartite,
    is_connected, is_diamond_c4_free, is_duplicate_free, is_regular, is_sperner,
    is_weak_duplicate, leaf_classes, leaves, open_neighbourhood,
)
from .nested_coloring import (
    NestedColoring, brute_force_nested_chromatic, chi_nested, chromatic_number_exact,
    critical_vertices, is_colour_nested, is_nested_coloring, is_nested_critical,
    is_nested_independent, is_vertex_critical, nested_chromatic_number,
)
from .poset import ChainCover, Matching, Poset, height, max_matching, min_chain_cover, weak_duplicate_poset, width
from .io import parse_edge_list, parse_graph6, write_edge_list, write_graph6

__version__ = "0.1.0"
