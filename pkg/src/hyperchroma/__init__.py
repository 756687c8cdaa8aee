"""Linear hypergraphs: plane constructions, edge colouring, canonical forms."""

from .core import Hypergraph, SimpleGraph
from .coloring import EdgeColoring, exact_chromatic_index
from .galois import gf
from .generators import field_plane, h3_prime_literal, truncated_plane, twisted_plane
from .symmetry import Permutation, are_isomorphic, automorphism_group, canonical_form

__all__ = [
    "EdgeColoring",
    "Hypergraph",
    "Permutation",
    "SimpleGraph",
    "are_isomorphic",
    "automorphism_group",
    "canonical_form",
    "exact_chromatic_index",
    "field_plane",
    "gf",
    "h3_prime_literal",
    "truncated_plane",
    "twisted_plane",
]
