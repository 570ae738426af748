"""Plane embeddings as rotation systems."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Optional, Sequence

import networkx as nx

from ..graph import Graph, edge


@dataclass(frozen=True, eq=False)
class PlaneEmbedding:
    """Rotation system of a plane graph plus a designated outer face.

    ``rotation[v]`` lists the neighbours of ``v`` in cyclic (clockwise) order.
    Faces are traced by leaving ``v`` along the successor of the arriving
    edge in ``v``'s rotation; each face is reported as the sequence of tails
    of its half-edges.
    """

    base: Graph
    rotation: Mapping[int, tuple[int, ...]]
    outer_face: tuple[int, ...] = field(default=())

    def _succ(self, v: int, u: int) -> int:
        rot = self.rotation[v]
        return rot[(rot.index(u) + 1) % len(rot)]

    def trace(self, u: int, v: int) -> tuple[int, ...]:
        """The face containing the half-edge ``u -> v``, starting at ``u``."""
        walk = [u]
        a, b = u, v
        while True:
            a, b = b, self._succ(b, a)
            if (a, b) == (u, v):
                return tuple(walk)
            walk.append(a)

    def faces(self) -> list[tuple[int, ...]]:
        used: set[tuple[int, int]] = set()
        out = []
        for u in self.base.vertices:
            if not self.rotation[u]:
                out.append((u,))
                continue
            for v in self.rotation[u]:
                if (u, v) in used:
                    continue
                f = self.trace(u, v)
                for i, x in enumerate(f):
                    used.add((x, f[(i + 1) % len(f)]))
                out.append(f)
        return out

    def euler_characteristic_holds(self) -> bool:
        """``|V| - |E| + |F| = 1 + c`` with the outer faces of all ``c`` components counted once."""
        c = len(self.base.components())
        merged_faces = len(self.faces()) - (c - 1)
        return self.base.vertex_count - self.base.edge_count + merged_faces == 1 + c

    def is_valid(self) -> bool:
        for v in self.base.vertices:
            rot = self.rotation.get(v, ())
            if len(rot) != len(set(rot)) or set(rot) != set(self.base.adjacency[v]):
                return False
        return self.euler_characteristic_holds()

    def face_with_edge(self, u: int, v: int) -> list[tuple[int, ...]]:
        """Both faces along edge ``uv``, each rotated/reversed to read ``u, v, ...``."""
        out = []
        for a, b in ((u, v), (v, u)):
            f = self.trace(a, b)
            if (a, b) == (u, v):
                out.append(f)
            else:
                # f reads v, u, ..., reverse it to read u, v, ...
                r = f[::-1]
                i = r.index(u)
                out.append(r[i:] + r[:i])
        return out

    def is_face(self, cycle: Sequence[int]) -> bool:
        cyc = tuple(cycle)
        n = len(cyc)
        for f in self.faces():
            if len(f) != n or set(f) != set(cyc):
                continue
            for seq in (f, f[::-1]):
                i = seq.index(cyc[0])
                if seq[i:] + seq[:i] == cyc:
                    return True
        return False

    def with_outer_face(self, face: Sequence[int]) -> "PlaneEmbedding":
        return PlaneEmbedding(self.base, self.rotation, tuple(face))

    def delete_vertex(self, x: int) -> "PlaneEmbedding":
        g = self.base.induced(v for v in self.base.vertices if v != x)
        rot = {v: tuple(w for w in self.rotation[v] if w != x) for v in g.vertices}
        return PlaneEmbedding(g, rot)


def _to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.sorted_edges)
    return h


def planar_embedding(g: Graph) -> Optional[PlaneEmbedding]:
    """A plane embedding of ``g`` or ``None`` when ``g`` is not planar.

    The outer face is the face to the left of the half-edge along the
    smallest edge, read from its smaller endpoint.
    """
    ok, emb = nx.check_planarity(_to_nx(g))
    if not ok:
        return None
    rotation = {v: tuple(emb.neighbors_cw_order(v)) if g.adjacency[v] else () for v in g.vertices}
    pe = PlaneEmbedding(g, rotation)
    if g.edges:
        u, v = g.sorted_edges[0]
        pe = pe.with_outer_face(pe.trace(u, v))
    elif g.vertices:
        pe = pe.with_outer_face((g.vertices[0],))
    return pe


def is_planar(g: Graph) -> bool:
    return planar_embedding(g) is not None


def is_biconnected(g: Graph) -> bool:
    return g.vertex_count >= 2 and g.is_connected() and not any(True for _ in nx.articulation_points(_to_nx(g)))


def simple_cycle(walk: Sequence[int]) -> bool:
    return len(walk) >= 3 and len(set(walk)) == len(walk)


def cycle_edges(walk: Sequence[int]) -> set:
    return {edge(walk[i], walk[(i + 1) % len(walk)]) for i in range(len(walk))}
