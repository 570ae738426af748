"""Planar base solvers: boundary-constrained certificates and the triangle lift."""
from __future__ import annotations

from typing import Optional, Sequence

from ..certifier import DEFAULT_ENUMERATION_LIMIT
from ..errors import ContractViolation, PreconditionError
from ..graph import Signature, edge
from ..decomposer.planarity import PlaneEmbedding, is_biconnected, simple_cycle
from .certificate import Certificate, Mode
from .contracts import anchored_search, make_certificate
from .search import Constraints, constrained_search


def boundary_constraints(emb: PlaneEmbedding, boundary: Sequence[int], mode: Mode) -> Constraints:
    g = emb.base
    v1, v2, *rest = boundary
    outer = set(boundary)
    if mode is Mode.AT5:
        caps = {v: 2 if v in outer else 4 for v in g.vertices}
        exact = {v1: 0, v2: 1}
        return Constraints(caps=caps | exact, exact=exact)
    if mode is Mode.MATCH_AT4:
        caps = {v: 2 if v in outer else 3 for v in g.vertices}
        exact = {v1: 0, v2: 0}
        return Constraints(caps=caps | exact, exact=exact, removal="matching",
                           shared={v: 2 for v in rest})
    caps = {v: 1 if v in outer else 2 for v in g.vertices}
    exact = {v1: 0, v2: 0} | {v: 1 for v in rest}
    return Constraints(caps=caps | exact, exact=exact, removal="forest", acyclic=True)


def planar_boundary_cert(emb: PlaneEmbedding, boundary: Optional[Sequence[int]] = None, mode: Mode = Mode.AT5,
                         sig: Optional[Signature] = None,
                         exact_limit: int = DEFAULT_ENUMERATION_LIMIT) -> Certificate:
    """Certificate for a 2-connected plane graph with boundary cycle ``v1 v2 ... vm``.

    AT5: d+(v1)=0, d+(v2)=1, other boundary vertices at most 2, interior at most 4.
    MATCH_AT4: d+(v1)=d+(v2)=0, d+(vi) <= 2 - d_M(vi) on the boundary, interior at most 3.
    FOREST_AT3: d+(v1)=d+(v2)=0, d+(vi)=1 on the boundary, interior at most 2, acyclic.
    """
    mode = Mode(mode)
    g = emb.base
    boundary = tuple(emb.outer_face if boundary is None else boundary)
    if not simple_cycle(boundary) or not emb.is_face(boundary):
        raise PreconditionError(f"{boundary} is not a facial cycle of the embedding")
    if not is_biconnected(g):
        raise PreconditionError("boundary certificates need a 2-connected plane graph")
    cons = boundary_constraints(emb, boundary, mode)
    removed, arcs = constrained_search(g, cons, sig)
    bounds = dict(cons.caps)
    for x in cons.shared:
        # a boundary vertex covered by the matching may point at one vertex only
        bounds[x] = cons.shared[x] - sum(x in e for e in removed)
    return make_certificate(g, mode, removed, arcs, bounds, boundary[:2], sig, exact_limit)


def _sub_face(emb: PlaneEmbedding, v1: int, v2: int, v3: int) -> Optional[tuple[int, ...]]:
    sub = emb.delete_vertex(v3)
    nbrs = set(emb.base.adjacency[v3]) - {v1, v2}
    for f in sub.face_with_edge(v1, v2):
        if nbrs <= set(f) and simple_cycle(f):
            return f
    return None


def triangle_lift(emb: PlaneEmbedding, triangle: Sequence[int], mode: Mode = Mode.MATCH_AT4,
                  sig: Optional[Signature] = None, exact_limit: int = DEFAULT_ENUMERATION_LIMIT) -> Certificate:
    """Certificate with anchor triangle ``(v1, v2, v3)`` on a face of ``emb``.

    Solve ``G - v3`` with ``v1 v2`` on its boundary, then put ``v3`` back:
    every other neighbour points at ``v3``; ``v3`` points at ``v1`` (and at
    ``v2`` in matching mode, while in forest mode ``v2 v3`` joins the forest).
    ``v1`` and ``v2`` stay sinks, so no new Eulerian subgraph appears.
    """
    mode = Mode(mode)
    if mode is Mode.AT5:
        raise PreconditionError("triangle_lift covers the matching and forest modes")
    g = emb.base
    v1, v2, v3 = triangle = tuple(triangle)
    if len(set(triangle)) != 3 or not g.is_clique(triangle) or not emb.is_face(triangle):
        raise PreconditionError(f"{triangle} is not a facial triangle")
    face = _sub_face(emb, v1, v2, v3) if g.vertex_count > 3 else None
    sub_g = g.induced(v for v in g.vertices if v != v3)
    if face is None or not is_biconnected(sub_g):
        return anchored_search(g, mode, triangle, sig, exact_limit)
    sub = emb.delete_vertex(v3).with_outer_face(face)
    sub_sig = sig.restrict(sub_g) if sig is not None else None
    try:
        inner = planar_boundary_cert(sub, face, mode, sub_sig, exact_limit)
    except ContractViolation:
        return anchored_search(g, mode, triangle, sig, exact_limit)
    others = sorted(set(g.adjacency[v3]) - {v1, v2})
    arcs = set(inner.arcs) | {(u, v3) for u in others} | {(v3, v1)}
    removed = set(inner.removed)
    if mode is Mode.MATCH_AT4:
        arcs.add((v3, v2))
    else:
        removed.add(edge(v2, v3))
    bounds = {v: mode.bound for v in g.vertices}
    bounds.update(zip(triangle, mode.anchor_pattern))
    try:
        return make_certificate(g, mode, removed, arcs, bounds, triangle, sig, exact_limit)
    except ContractViolation:
        return anchored_search(g, mode, triangle, sig, exact_limit)
