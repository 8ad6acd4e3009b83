"""Path diversity of AS-level announcement digraphs."""

from .disjoint import PathSet, adp, brute_force_adp, destination_digraph, extract_paths, idp
from .graph import (
    AnnouncementDigraph,
    Digraph,
    DomainError,
    GraphError,
    InvariantError,
    build,
    converse,
    from_adjacency_matrix,
    is_arborescence,
    reachable_from,
    to_adjacency_matrix,
    to_dot,
    union,
)
from .ppr import BgpDigraph, select_bgp_digraph, verify_single_path

__version__ = "0.1.0"
