"""Reproducible random graphs for tests, demos and the ``gen`` command."""
from __future__ import annotations

import random
from itertools import combinations
from typing import Optional

from .decomposer.wagner import WAGNER
from .graph import Edge, Graph, edge

KINDS = ("planar", "cliquesum", "wagner", "k5")


def _connected_without(edges: set, e: Edge, n: int) -> bool:
    adj: dict[int, list[int]] = {v: [] for v in range(n)}
    for a, b in edges:
        if (a, b) != e:
            adj[a].append(b)
            adj[b].append(a)
    seen, stack = {0}, [0]
    while stack:
        for y in adj[stack.pop()]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == n


def random_planar(n: int, rng: random.Random, delete_p: float = 0.3) -> Graph:
    """Stacked triangulation grown by splitting random faces, then thinned.

    Each edge is deleted with probability ``delete_p`` as long as the graph
    stays connected.
    """
    if n < 1:
        raise ValueError("need at least one vertex")
    if n <= 3:
        return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)] + ([(0, 2)] if n == 3 else []))
    edges = {(0, 1), (0, 2), (1, 2)}
    faces = [(0, 1, 2), (0, 2, 1)]
    for v in range(3, n):
        a, b, c = faces.pop(rng.randrange(len(faces)))
        edges |= {edge(a, v), edge(b, v), edge(c, v)}
        faces += [(a, b, v), (b, c, v), (c, a, v)]
    for e in sorted(edges):
        if rng.random() < delete_p and _connected_without(edges, e, n):
            edges.discard(e)
    return Graph.from_edges(n, sorted(edges))


def _cliques(g: Graph, k: int) -> list[tuple[int, ...]]:
    return [c for c in combinations(g.vertices, k) if g.is_clique(c)]


def random_cliquesum(max_vertices: int, rng: random.Random, wagner_p: float = 0.25,
                     delete_p: float = 0.3) -> Graph:
    """Glue planar pieces (4 to 7 vertices) and copies of W along random 1-, 2- or 3-cliques.

    After each sum every edge of the shared clique is deleted with
    probability ``delete_p`` if the graph stays connected.
    """
    if max_vertices < 4:
        raise ValueError("clique-sums need at least 4 vertices")

    def new_piece(limit: int) -> Optional[Graph]:
        if limit >= 8 and rng.random() < wagner_p:
            return WAGNER
        if limit < 4:
            return None
        return random_planar(rng.randint(4, min(7, limit)), rng, delete_p=0.2)

    g = new_piece(max_vertices)
    edges = set(g.edges)
    n = g.vertex_count
    while True:
        k = rng.choice((1, 2, 3))
        h = new_piece(max_vertices - n + k)
        if h is None:
            break
        mine = _cliques(Graph(tuple(range(n)), frozenset(edges)), k)
        theirs = _cliques(h, k)
        if not mine or not theirs:
            if n + h.vertex_count - 1 > max_vertices:
                break
            continue
        src, dst = rng.choice(theirs), rng.choice(mine)
        mapping = dict(zip(src, dst))
        for v in h.vertices:
            if v not in mapping:
                mapping[v] = n
                n += 1
        edges |= {edge(mapping[a], mapping[b]) for a, b in h.edges}
        for a, b in combinations(dst, 2):
            e = edge(a, b)
            if rng.random() < delete_p and _connected_without(edges, e, n):
                edges.discard(e)
        if n >= max_vertices - 1:
            break
    return Graph.from_edges(n, sorted(edges))


def k5_control(n: int, rng: random.Random) -> Graph:
    """K5 on 0..4 with ``n - 5`` extra vertices hung on random earlier vertices."""
    if n < 5:
        raise ValueError("a K5 control needs at least 5 vertices")
    edges = {edge(a, b) for a, b in combinations(range(5), 2)}
    for v in range(5, n):
        for u in rng.sample(range(v), min(v, rng.choice((1, 2)))):
            edges.add(edge(u, v))
    return Graph.from_edges(n, sorted(edges))


def random_connected(n: int, m: int, rng: random.Random) -> Graph:
    """Random spanning tree plus ``m - n + 1`` random extra edges (capped at complete)."""
    edges = {edge(v, rng.randrange(v)) for v in range(1, n)}
    pool = [e for e in combinations(range(n), 2) if e not in edges]
    rng.shuffle(pool)
    edges |= set(pool[:max(0, m - len(edges))])
    return Graph.from_edges(n, sorted(edges))


def generate(kind: str, n: int, seed: int) -> Graph:
    rng = random.Random(seed)
    if kind == "planar":
        return random_planar(n, rng)
    if kind == "cliquesum":
        return random_cliquesum(n, rng)
    if kind == "wagner":
        return WAGNER
    if kind == "k5":
        return k5_control(n, rng)
    raise ValueError(f"unknown corpus kind {kind!r}; expected one of {', '.join(KINDS)}")
