"""Brute-force K5-minor search by exhaustive edge contraction.

Kept independent of the decomposition code so the two can be compared.
"""
from __future__ import annotations

from itertools import combinations

from ..errors import ResourceLimitError
from ..graph import Graph

BRUTE_FORCE_LIMIT = 12

Edges = frozenset


def _adj(edges) -> dict[int, set[int]]:
    adj: dict[int, set[int]] = {}
    for u, v in edges:
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    return adj


def _contract(edges, a: int, b: int):
    keep, gone = min(a, b), max(a, b)
    out = set()
    for u, v in edges:
        u = keep if u == gone else u
        v = keep if v == gone else v
        if u != v:
            out.add((u, v) if u < v else (v, u))
    return frozenset(out)


def _reduce(edges):
    # leaves can be deleted and degree-2 vertices suppressed without
    # affecting minors of minimum degree >= 3
    while True:
        adj = _adj(edges)
        low = next((v for v in sorted(adj) if len(adj[v]) <= 2), None)
        if low is None:
            return edges
        nbrs = sorted(adj[low])
        if len(nbrs) == 1:
            edges = frozenset(e for e in edges if low not in e)
        else:
            edges = _contract(edges, low, nbrs[0])


def _has_k5_subgraph(adj) -> bool:
    big = sorted(v for v in adj if len(adj[v]) >= 4)
    for combo in combinations(big, 5):
        if all(b in adj[a] for a, b in combinations(combo, 2)):
            return True
    return False


def has_k5_minor_bruteforce(g: Graph, limit: int = BRUTE_FORCE_LIMIT) -> bool:
    if g.vertex_count > limit:
        raise ResourceLimitError(f"brute-force minor search is limited to {limit} vertices")
    seen: set = set()

    def rec(edges) -> bool:
        edges = _reduce(edges)
        if edges in seen:
            return False
        seen.add(edges)
        adj = _adj(edges)
        if len(adj) < 5 or len(edges) < 10:
            return False
        if _has_k5_subgraph(adj):
            return True
        return any(rec(_contract(edges, u, v)) for u, v in sorted(edges))

    return rec(frozenset(g.edges))
