"""Exact clique and s-club solvers, and the CLIQUE to 2-CLUB gadget."""

from ._core import (
    EmptyGraph,
    Error,
    Graph,
    InvalidEdge,
    InvalidK,
    InvalidVertex,
    NotAClique,
    ParseError,
    ReducedInstance,
    SolveResult,
    TooLarge,
    bfs_distances,
    brute_force_max_clique,
    brute_force_max_s_club,
    connected_components,
    diameter,
    emit_graph,
    extract_clique,
    forward_map,
    has_s_club_of_size,
    induced_subgraph,
    is_clique,
    is_s_club,
    is_s_club_cluster,
    max_clique,
    max_s_club,
    min_deletion_to_s_club_cluster,
    parse_graph,
    reduce,
    run_equivalence_sweep,
    run_verify,
    target_size,
    validate_gadget,
    verify_deletion,
)

__all__ = [name for name in dir() if not name.startswith("_")]
