"""Exact minimum positive co-degree computations for small hypergraphs."""

from ._copex import (
    Graph,
    blowup_mpcd_fraction,
    canonical_form,
    classify_gamma_region,
    co_plus_ex,
    codegree,
    construct,
    construction_names,
    enumerate_graphs,
    exists_embedding,
    exists_homomorphism,
    from_text,
    induced_density,
    induced_family_of_blowup,
    induced_subgraph,
    instantiate_blowup,
    integer_class_sizes,
    is_isomorphic,
    link_graph,
    min_pos_codegree,
    noninduced_density,
    optimize_blowup_weights,
    pattern_embeddings,
    per_pair_codegree_value,
    suspension,
)

__all__ = [
    "Graph",
    "blowup_mpcd_fraction",
    "canonical_form",
    "classify_gamma_region",
    "co_plus_ex",
    "codegree",
    "construct",
    "construction_names",
    "enumerate_graphs",
    "exists_embedding",
    "exists_homomorphism",
    "from_text",
    "induced_density",
    "induced_family_of_blowup",
    "induced_subgraph",
    "instantiate_blowup",
    "integer_class_sizes",
    "is_isomorphic",
    "link_graph",
    "min_pos_codegree",
    "noninduced_density",
    "optimize_blowup_weights",
    "pattern_embeddings",
    "per_pair_codegree_value",
    "suspension",
]
