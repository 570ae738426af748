"""Clique-sum decomposition into planar and Wagner pieces.

A connected graph is a leaf if it is planar or isomorphic to W.  Otherwise we
look for a separator ``S`` of at most three vertices, complete ``S`` to a
clique inside every piece ``G[C + S]`` (``C`` a component of ``G - S``) and
recurse.  Completing ``S`` can create a K5 minor that ``G`` does not have, so
a separator is only accepted when every piece decomposes; when no separator
works the graph is reported as containing K5 as a minor.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterator, Optional, Union

from ..errors import PreconditionError
from ..graph import Edge, Graph, edge
from .minors import has_k5_minor_bruteforce
from .planarity import PlaneEmbedding, planar_embedding
from .wagner import is_wagner


@dataclass(frozen=True, eq=False)
class Leaf:
    piece: Graph
    kind: str  # "planar" or "wagner"
    embedding: Optional[PlaneEmbedding] = None
    virtual_edges: frozenset[Edge] = frozenset()

    @property
    def vertex_map(self) -> tuple[int, ...]:
        # pieces keep the labels of the input graph
        return self.piece.vertices


@dataclass(frozen=True, eq=False)
class SumNode:
    clique: tuple[int, ...]
    children: tuple["SumTree", "SumTree"]


SumTree = Union[Leaf, SumNode]


@dataclass(frozen=True)
class K5Verdict:
    piece: Graph
    reason: str = "neither planar nor Wagner and no valid separator of size <= 3"

    def __str__(self):
        return f"K5 minor in piece on vertices {list(self.piece.vertices)}: {self.reason}"


@dataclass(frozen=True)
class Separation:
    clique: tuple[int, ...]
    sides: tuple[tuple[int, ...], ...]

    def virtual_edges(self, g: Graph) -> frozenset[Edge]:
        return frozenset(edge(a, b) for a, b in combinations(self.clique, 2) if not g.has_edge(a, b))


def clique_separators(g: Graph, max_size: int = 3) -> Iterator[Separation]:
    """Every vertex set of size <= ``max_size`` whose removal disconnects ``g``.

    Order: sets that already induce a clique first, then lexicographically.
    """
    if not g.is_connected():
        raise PreconditionError("separator search needs a connected graph")
    cands = []
    for k in range(1, max_size + 1):
        for s in combinations(g.vertices, k):
            rest = g.induced(v for v in g.vertices if v not in s)
            comps = rest.components()
            if len(comps) >= 2:
                cands.append((not g.is_clique(s), s, tuple(comps)))
    cands.sort()
    for _, s, comps in cands:
        yield Separation(s, comps)


def find_clique_separator(g: Graph, max_size: int = 3) -> Optional[Separation]:
    return next(clique_separators(g, max_size), None)


def piece(g: Graph, clique: tuple[int, ...], side: tuple[int, ...]) -> Graph:
    """``G[side + clique]`` with the clique completed."""
    return g.induced(set(side) | set(clique)).with_edges(combinations(clique, 2))


@lru_cache(maxsize=4096)
def _decompose(g: Graph) -> Union[SumTree, K5Verdict]:
    emb = planar_embedding(g)
    if emb is not None:
        return Leaf(g, "planar", emb)
    if is_wagner(g):
        return Leaf(g, "wagner")
    for sep in clique_separators(g):
        trees = []
        for side in sep.sides:
            t = _decompose(piece(g, sep.clique, side))
            if isinstance(t, K5Verdict):
                break
            trees.append(t)
        else:
            tree = trees[-1]
            for t in reversed(trees[:-1]):
                tree = SumNode(sep.clique, (t, tree))
            return tree
    return K5Verdict(g)


def _mark_virtual(tree: SumTree, g: Graph) -> SumTree:
    if isinstance(tree, Leaf):
        return Leaf(tree.piece, tree.kind, tree.embedding, tree.piece.edges - g.edges)
    return SumNode(tree.clique, tuple(_mark_virtual(c, g) for c in tree.children))


def decompose(g: Graph) -> Union[SumTree, K5Verdict]:
    if not g.is_connected():
        raise PreconditionError("decompose needs a connected graph; split components first")
    out = _decompose(g)
    return out if isinstance(out, K5Verdict) else _mark_virtual(out, g)


def valid_separations(g: Graph) -> Iterator[Separation]:
    """Separators whose completed pieces are all K5-minor-free, in preference order."""
    for sep in clique_separators(g):
        if all(not isinstance(_decompose(piece(g, sep.clique, side)), K5Verdict) for side in sep.sides):
            yield sep


def leaves(tree: SumTree) -> list[Leaf]:
    if isinstance(tree, Leaf):
        return [tree]
    return [x for c in tree.children for x in leaves(c)]


def reassemble(tree: SumTree) -> Graph:
    ls = leaves(tree)
    vertices = set().union(*(l.piece.vertices for l in ls))
    edges = set().union(*(l.piece.edges for l in ls))
    virtual = set().union(*(l.virtual_edges for l in ls))
    return Graph(tuple(vertices), frozenset(edges - virtual))


def has_k5_minor(g: Graph, method: str = "decompose") -> bool:
    if method == "brute":
        return has_k5_minor_bruteforce(g)
    if method != "decompose":
        raise ValueError(f"unknown method {method!r}")
    return any(isinstance(_decompose(g.induced(c)), K5Verdict) for c in g.components())


def sumtree_to_dict(tree: SumTree) -> dict:
    if isinstance(tree, Leaf):
        out = {
            "kind": "leaf",
            "piece_kind": tree.kind,
            "vertices": list(tree.piece.vertices),
            "edges": [list(e) for e in tree.piece.sorted_edges],
            "virtual_edges": sorted(list(e) for e in tree.virtual_edges),
        }
        if tree.embedding is not None:
            out["rotation"] = [[v, list(tree.embedding.rotation[v])] for v in tree.piece.vertices]
            out["outer_face"] = list(tree.embedding.outer_face)
        return out
    return {"kind": "sum", "clique": list(tree.clique),
            "children": [sumtree_to_dict(c) for c in tree.children]}
