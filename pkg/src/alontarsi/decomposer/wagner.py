"""Recognition of the Wagner graph: an 8-cycle ``u1..u8`` plus the chords ``u_i u_{i+4}``."""
from __future__ import annotations

from collections import deque
from typing import Iterator, Optional

from ..graph import Graph

# u1..u8 are vertices 0..7 here
WAGNER = Graph.from_edges(8, [(i, (i + 1) % 8) for i in range(8)] + [(i, i + 4) for i in range(4)])


def wagner_graph() -> Graph:
    return WAGNER


def girth(g: Graph) -> Optional[int]:
    best = None
    for s in g.vertices:
        dist = {s: 0}
        parent = {s: None}
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.adjacency[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    length = dist[x] + dist[y] + 1
                    if best is None or length < best:
                        best = length
    return best


def _invariants_match(g: Graph) -> bool:
    return (g.vertex_count == 8 and g.edge_count == 12
            and all(g.degree(v) == 3 for v in g.vertices) and girth(g) == 4)


def wagner_isomorphisms(g: Graph) -> Iterator[dict[int, int]]:
    """Every isomorphism from the canonical W (labels 0..7) onto ``g``."""
    if not _invariants_match(g):
        return
    order = [0, 1, 7, 4, 2, 6, 5, 3]  # each vertex after the first has an earlier neighbour
    wa = WAGNER.adjacency

    def extend(i: int, phi: dict[int, int], used: set[int]) -> Iterator[dict[int, int]]:
        if i == len(order):
            yield dict(phi)
            return
        x = order[i]
        placed = [y for y in wa[x] if y in phi]
        cands = g.vertices if not placed else g.adjacency[phi[placed[0]]]
        for c in sorted(cands):
            if c in used:
                continue
            if any((y in phi) and (phi[y] in g.adjacency[c]) != (y in wa[x]) for y in phi):
                continue
            phi[x] = c
            used.add(c)
            yield from extend(i + 1, phi, used)
            del phi[x]
            used.discard(c)

    yield from extend(0, {}, set())


def wagner_isomorphism(g: Graph) -> Optional[dict[int, int]]:
    return next(wagner_isomorphisms(g), None)


def is_wagner(g: Graph) -> bool:
    return wagner_isomorphism(g) is not None
