"""Graceful and alpha-labelings of trees: exhaustive search and certificates."""

from .families import FamilyFilter, filter_family, generate_trees
from .fixtures import FIXTURES, P6, S, T
from .labeling import (
    AlphaResult,
    Labeling,
    bipartite_critical,
    complement,
    edge_weights,
    is_alpha,
    is_graceful,
)
from .probes import hunt, probe_q1, probe_q2, probe_q3, relaxed_s_check, zero_centered
from .search import (
    ConstraintSet,
    SearchCertificate,
    brute_force_oracle,
    exists_alpha_with,
    search_graceful,
)
from .tree import Tree, TreeProfile, canonical_code, parse_tree, profile

__all__ = [
    "AlphaResult",
    "ConstraintSet",
    "FIXTURES",
    "FamilyFilter",
    "Labeling",
    "P6",
    "S",
    "SearchCertificate",
    "T",
    "Tree",
    "TreeProfile",
    "bipartite_critical",
    "brute_force_oracle",
    "canonical_code",
    "complement",
    "edge_weights",
    "exists_alpha_with",
    "filter_family",
    "generate_trees",
    "hunt",
    "is_alpha",
    "is_graceful",
    "parse_tree",
    "probe_q1",
    "probe_q2",
    "probe_q3",
    "profile",
    "relaxed_s_check",
    "search_graceful",
    "zero_centered",
]
