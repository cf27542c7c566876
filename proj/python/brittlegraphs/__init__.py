"""Graph connectivity functions, exact k-brittleness, vertex-minors, and
linear rank-width on desk-scale graphs (up to 63 vertices)."""

from ._core import (  # noqa: F401
    Graph,
    ResourceLimit,
    apply_word,
    bound_ell,
    brittleness,
    brittleness_naive,
    claim_ids,
    complement,
    complete,
    complete_bipartite,
    components,
    construction,
    cutrank,
    degree_or_path,
    delete_bridges,
    delete_vertex,
    disjoint_union,
    edge_boundary,
    empty,
    find_induced_pattern,
    find_subgraph_pattern,
    find_sunflower,
    from_graph6,
    from_sparse6,
    has_vertex_minor,
    induced,
    is_isomorphic,
    join,
    layout_width,
    linear_rank_width,
    local_complement,
    m_copies,
    matching_boundary,
    orbit,
    partition_width,
    path,
    pivot,
    quotient_family,
    star,
    to_graph6,
    to_sparse6,
    tutte_bridges,
    verify,
    vertex_boundary,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
