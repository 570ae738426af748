from .decompose import (K5Verdict, Leaf, Separation, SumNode, SumTree, clique_separators, decompose,
                        find_clique_separator, has_k5_minor, leaves, piece, reassemble, sumtree_to_dict,
                        valid_separations)
from .minors import has_k5_minor_bruteforce
from .planarity import PlaneEmbedding, is_biconnected, is_planar, planar_embedding
from .wagner import girth, is_wagner, wagner_graph, wagner_isomorphism, wagner_isomorphisms

__all__ = [
    "K5Verdict", "Leaf", "PlaneEmbedding", "Separation", "SumNode", "SumTree", "clique_separators",
    "decompose", "find_clique_separator", "girth", "has_k5_minor", "has_k5_minor_bruteforce",
    "is_biconnected", "is_planar", "is_wagner", "leaves", "piece", "planar_embedding", "reassemble",
    "sumtree_to_dict", "valid_separations", "wagner_graph", "wagner_isomorphism", "wagner_isomorphisms",
]
