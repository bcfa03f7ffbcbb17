"""Distinguishing numbers of merged Johnson graphs, with verified certificates.

The vertex set of J(n, k)_I is the k-subsets of {1..n}; two subsets are
adjacent when their intersection has size k - i for some i in I. The package
builds these graphs, classifies their automorphism groups, computes
distinguishing numbers case by case, and re-checks every claim with a
color-aware automorphism search engine.
"""

from .actions import (
    AutDescriptor,
    Equipartition,
    classify,
    complement_involution,
    count_fixed_equipartitions,
    equipartitions,
    extended_action,
    failure_bound_parts,
    generators,
    induced_vertex_perm,
    max_fixed_bound,
    pair_swap,
    random_coloring_failure_bound,
)
from .certificates import Certificate, CertificateError, dump, from_dict, from_json, load
from .combinatorics import (
    KSubset,
    Permutation,
    binom,
    compose,
    identity,
    intersection_size,
    inverse,
    parse_cycles,
    rank,
    transposition,
    unrank,
    window,
)
from .engine import (
    AttemptsExhausted,
    FamilyNotCovered,
    automorphism_group_order,
    breaking_automorphism,
    brute_force_dist,
    case8_value,
    case_coloring,
    coloring_from_detset,
    determining_set_for,
    distinguishing_number,
    gapped_window,
    matching_coloring,
    random_3_coloring,
    verify_certificate,
)
from .graphs import (
    EmptyDistanceSet,
    Graph,
    InvalidSpec,
    MergedJohnsonSpec,
    build,
    canonicalize,
    complement,
    connected_components,
    degree_partition,
    induced_subgraph,
)
from .search import (
    Coloring,
    SearchBudgetExceeded,
    SearchResult,
    VertexPermutation,
    is_asymmetric,
    is_automorphism,
    is_determining_set,
    is_distinguishing,
    is_set_distinguishing,
    search,
)

__version__ = "0.1.0"

__all__ = [
    "AttemptsExhausted",
    "AutDescriptor",
    "Certificate",
    "CertificateError",
    "Coloring",
    "EmptyDistanceSet",
    "Equipartition",
    "FamilyNotCovered",
    "Graph",
    "InvalidSpec",
    "KSubset",
    "MergedJohnsonSpec",
    "Permutation",
    "SearchBudgetExceeded",
    "SearchResult",
    "VertexPermutation",
    "automorphism_group_order",
    "binom",
    "breaking_automorphism",
    "brute_force_dist",
    "build",
    "canonicalize",
    "case8_value",
    "case_coloring",
    "classify",
    "coloring_from_detset",
    "complement",
    "complement_involution",
    "compose",
    "connected_components",
    "count_fixed_equipartitions",
    "degree_partition",
    "determining_set_for",
    "distinguishing_number",
    "dump",
    "equipartitions",
    "extended_action",
    "failure_bound_parts",
    "from_dict",
    "from_json",
    "gapped_window",
    "generators",
    "identity",
    "induced_subgraph",
    "induced_vertex_perm",
    "intersection_size",
    "inverse",
    "is_asymmetric",
    "is_automorphism",
    "is_determining_set",
    "is_distinguishing",
    "is_set_distinguishing",
    "load",
    "matching_coloring",
    "max_fixed_bound",
    "pair_swap",
    "parse_cycles",
    "random_3_coloring",
    "random_coloring_failure_bound",
    "rank",
    "search",
    "transposition",
    "unrank",
    "verify_certificate",
    "window",
]
