"""Simple graphs, orientations, signatures and the structural predicates on them.

Vertices are integers and the vertex order is numeric order.  Graphs read
from text are labelled ``0..n-1``; subgraphs keep the labels of their parent,
so pieces of a decomposition can be glued back without relabelling.
"""
from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Optional, Sequence

from .errors import GraphFormatError, MalformedInputError

Edge = tuple[int, int]
Arc = tuple[int, int]


def edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    vertices: tuple[int, ...]
    edges: frozenset[Edge]

    def __post_init__(self):
        vs = tuple(sorted(set(self.vertices)))
        if len(vs) != len(self.vertices):
            raise MalformedInputError("duplicate vertex")
        object.__setattr__(self, "vertices", vs)
        canon = set()
        present = set(vs)
        for u, v in self.edges:
            if u == v:
                raise MalformedInputError(f"loop at vertex {u}")
            if u not in present or v not in present:
                raise MalformedInputError(f"edge ({u}, {v}) has an endpoint outside the vertex set")
            canon.add(edge(u, v))
        object.__setattr__(self, "edges", frozenset(canon))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        edges = list(edges)
        seen = set()
        for e in edges:
            key = edge(*e)
            if key in seen:
                raise MalformedInputError(f"duplicate edge {key}")
            seen.add(key)
        return cls(tuple(range(n)), frozenset(seen))

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def sorted_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    @cached_property
    def adjacency(self) -> dict[int, frozenset[int]]:
        adj: dict[int, set[int]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return {v: frozenset(ns) for v, ns in adj.items()}

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return edge(u, v) in self.edges

    def is_clique(self, vs: Iterable[int]) -> bool:
        vs = list(vs)
        return all(self.has_edge(a, b) for i, a in enumerate(vs) for b in vs[i + 1:])

    def index(self, v: int) -> int:
        return self._index[v]

    @cached_property
    def _index(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    def induced(self, vs: Iterable[int]) -> "Graph":
        keep = set(vs)
        return Graph(tuple(keep), frozenset(e for e in self.edges if e[0] in keep and e[1] in keep))

    def with_edges(self, extra: Iterable[Sequence[int]]) -> "Graph":
        return Graph(self.vertices, self.edges | {edge(*e) for e in extra})

    def components(self) -> list[tuple[int, ...]]:
        seen: set[int] = set()
        out = []
        for s in self.vertices:
            if s in seen:
                continue
            comp = []
            queue = deque([s])
            seen.add(s)
            while queue:
                x = queue.popleft()
                comp.append(x)
                for y in self.adjacency[x]:
                    if y not in seen:
                        seen.add(y)
                        queue.append(y)
            out.append(tuple(sorted(comp)))
        return out

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def relabel(self, mapping: dict[int, int]) -> "Graph":
        return Graph(tuple(mapping[v] for v in self.vertices),
                     frozenset(edge(mapping[u], mapping[v]) for u, v in self.edges))

    def _check_subset(self, s: Iterable[Sequence[int]]) -> frozenset[Edge]:
        out = set()
        for e in s:
            key = edge(*e)
            if key not in self.edges:
                raise MalformedInputError(f"edge {key} is not in the graph")
            out.add(key)
        return frozenset(out)


@dataclass(frozen=True)
class Orientation:
    """A direction for every edge of ``base``; ``arcs`` holds (tail, head) pairs."""

    base: Graph
    arcs: frozenset[Arc]

    def __post_init__(self):
        arcs = frozenset(tuple(a) for a in self.arcs)
        object.__setattr__(self, "arcs", arcs)
        covered = [edge(*a) for a in arcs]
        if len(covered) != len(set(covered)) or set(covered) != self.base.edges:
            raise MalformedInputError("orientation must direct every edge of its base exactly once")

    @cached_property
    def out_neighbors(self) -> dict[int, tuple[int, ...]]:
        out: dict[int, list[int]] = {v: [] for v in self.base.vertices}
        for t, h in self.arcs:
            out[t].append(h)
        return {v: tuple(sorted(hs)) for v, hs in out.items()}

    def out_degree(self, v: int) -> int:
        return len(self.out_neighbors[v])

    def in_degree(self, v: int) -> int:
        return self.base.degree(v) - self.out_degree(v)

    def out_degrees(self) -> dict[int, int]:
        return {v: len(hs) for v, hs in self.out_neighbors.items()}

    def max_out_degree(self) -> int:
        return max((len(hs) for hs in self.out_neighbors.values()), default=0)

    def out_degree_vector(self) -> tuple[int, ...]:
        return tuple(self.out_degree(v) for v in self.base.vertices)

    def topological_order(self) -> Optional[list[int]]:
        """Kahn's algorithm; ``None`` when a directed cycle exists."""
        indeg = {v: 0 for v in self.base.vertices}
        for _, h in self.arcs:
            indeg[h] += 1
        ready = deque(v for v in self.base.vertices if indeg[v] == 0)
        order = []
        while ready:
            v = ready.popleft()
            order.append(v)
            for h in self.out_neighbors[v]:
                indeg[h] -= 1
                if indeg[h] == 0:
                    ready.append(h)
        return order if len(order) == len(indeg) else None


@dataclass(frozen=True)
class Signature:
    """Edge signs; only the negative edges are stored."""

    base: Graph
    negative: frozenset[Edge] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "negative", self.base._check_subset(self.negative))

    def sign(self, u: int, v: int) -> int:
        return -1 if edge(u, v) in self.negative else 1

    def restrict(self, g: Graph) -> "Signature":
        """Signature on a subgraph ``g`` of the base."""
        return Signature(g, frozenset(e for e in self.negative if e in g.edges))

    @classmethod
    def all_positive(cls, g: Graph) -> "Signature":
        return cls(g, frozenset())

    @classmethod
    def random(cls, g: Graph, rng: random.Random, p: float = 0.5) -> "Signature":
        return cls(g, frozenset(e for e in g.sorted_edges if rng.random() < p))


ROLES = ("plain", "matching", "forest")


@dataclass(frozen=True)
class EdgeSet:
    base: Graph
    members: frozenset[Edge]
    role: str = "plain"

    def __post_init__(self):
        if self.role not in ROLES:
            raise ValueError(f"unknown edge-set role {self.role!r}")
        object.__setattr__(self, "members", self.base._check_subset(self.members))
        if self.role == "matching" and not is_matching(self.base, self.members):
            raise MalformedInputError("edge set is not a matching")
        if self.role == "forest" and not is_forest(self.base, self.members):
            raise MalformedInputError("edge set contains a cycle")

    def degree(self, v: int) -> int:
        return sum(1 for e in self.members if v in e)


def is_matching(g: Graph, s: Iterable[Sequence[int]]) -> bool:
    covered: set[int] = set()
    for u, v in g._check_subset(s):
        if u in covered or v in covered:
            return False
        covered.update((u, v))
    return True


class _DisjointSets:
    def __init__(self):
        self.parent: dict[int, int] = {}

    def find(self, x: int) -> int:
        self.parent.setdefault(x, x)
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[ra] = rb
        return True


def is_forest(g: Graph, s: Iterable[Sequence[int]]) -> bool:
    ds = _DisjointSets()
    return all(ds.union(u, v) for u, v in g._check_subset(s))


def is_acyclic_orientation(d: Orientation) -> bool:
    return d.topological_order() is not None


def degeneracy_order(g: Graph) -> tuple[list[int], int]:
    """Peel a minimum-degree vertex (smallest label on ties) until nothing is left.

    Returns the removal order and the largest degree seen at removal time.
    """
    deg = {v: g.degree(v) for v in g.vertices}
    alive = set(g.vertices)
    order = []
    k = 0
    while alive:
        v = min(alive, key=lambda x: (deg[x], x))
        k = max(k, deg[v])
        order.append(v)
        alive.remove(v)
        for w in g.adjacency[v]:
            if w in alive:
                deg[w] -= 1
    return order, k


def delete_edges(g: Graph, s: Iterable[Sequence[int]]) -> Graph:
    return Graph(g.vertices, g.edges - g._check_subset(s))


def orientation_from_order(g: Graph, order: Sequence[int]) -> Orientation:
    """Acyclic orientation pointing every edge from the earlier to the later vertex of ``order``."""
    pos = {v: i for i, v in enumerate(order)}
    return Orientation(g, frozenset((u, v) if pos[u] < pos[v] else (v, u) for u, v in g.edges))


# -- text format -----------------------------------------------------------

def _tokens(line: str) -> list[tuple[str, int]]:
    """Whitespace-separated tokens with their 1-based columns."""
    fields = []
    col = 0
    for tok in line.split():
        col = line.index(tok, col) + 1
        fields.append((tok, col))
        col += len(tok) - 1
    return fields


def parse_graph(text: str) -> tuple[Graph, Optional[Signature]]:
    """Parse ``n m`` followed by ``m`` lines ``u v`` or ``u v s`` with ``s`` in ``{+, -}``.

    A signature is returned iff any edge line carries a sign; files must be
    consistently signed or unsigned.
    """
    lines = text.splitlines()
    rows = [(i + 1, ln) for i, ln in enumerate(lines) if ln.strip()]
    if not rows:
        raise GraphFormatError(1, 1, "empty input")
    lineno, header = rows[0]
    fields = _tokens(header)
    if len(fields) != 2:
        raise GraphFormatError(lineno, 1, "header must be 'n m'")
    n, m = (_parse_nonneg(tok, lineno, col) for tok, col in fields)
    body = rows[1:]
    if len(body) != m:
        where = body[m][0] if len(body) > m else (body[-1][0] + 1 if body else lineno + 1)
        raise GraphFormatError(where, 1, f"expected {m} edge lines, found {len(body)}")
    edges: list[Edge] = []
    negative = []
    seen: set[Edge] = set()
    signed_flags = set()
    for lineno, ln in body:
        fields = _tokens(ln)
        if len(fields) not in (2, 3):
            raise GraphFormatError(lineno, 1, "edge line must be 'u v' or 'u v s'")
        u = _parse_nonneg(fields[0][0], lineno, fields[0][1])
        v = _parse_nonneg(fields[1][0], lineno, fields[1][1])
        if u == v:
            raise GraphFormatError(lineno, fields[1][1], f"loop at vertex {u}")
        if not u < v:
            raise GraphFormatError(lineno, fields[1][1], "endpoints must satisfy u < v")
        if v >= n:
            raise GraphFormatError(lineno, fields[1][1], f"vertex {v} out of range for n={n}")
        if (u, v) in seen:
            raise GraphFormatError(lineno, fields[0][1], f"duplicate edge {u} {v}")
        seen.add((u, v))
        edges.append((u, v))
        signed_flags.add(len(fields) == 3)
        if len(fields) == 3:
            tok, col = fields[2]
            if tok not in ("+", "-"):
                raise GraphFormatError(lineno, col, f"sign must be '+' or '-', got {tok!r}")
            if tok == "-":
                negative.append((u, v))
    if len(signed_flags) > 1:
        raise GraphFormatError(body[0][0], 1, "mixed signed and unsigned edge lines")
    g = Graph.from_edges(n, edges)
    sig = Signature(g, frozenset(negative)) if signed_flags == {True} else None
    return g, sig


def _parse_nonneg(tok: str, lineno: int, col: int) -> int:
    if not tok.isdigit():
        raise GraphFormatError(lineno, col, f"expected a nonnegative integer, got {tok!r}")
    return int(tok)


def format_graph(g: Graph, sig: Optional[Signature] = None) -> str:
    if g.vertices != tuple(range(g.vertex_count)):
        raise MalformedInputError("text format needs vertices labelled 0..n-1")
    lines = [f"{g.vertex_count} {g.edge_count}"]
    for u, v in g.sorted_edges:
        if sig is None:
            lines.append(f"{u} {v}")
        else:
            lines.append(f"{u} {v} {'-' if sig.sign(u, v) < 0 else '+'}")
    return "\n".join(lines) + "\n"


def iter_orientations(g: Graph) -> Iterator[Orientation]:
    """All ``2^|E|`` orientations, in a fixed order."""
    es = g.sorted_edges
    for mask in range(1 << len(es)):
        yield Orientation(g, frozenset((v, u) if mask >> i & 1 else (u, v) for i, (u, v) in enumerate(es)))
