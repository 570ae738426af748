"""Combining certificates across a clique-sum."""
from __future__ import annotations

from dataclasses import replace
from itertools import combinations
from typing import Iterable, Sequence

from ..errors import PreconditionError
from ..graph import Edge, Graph, edge, is_forest, is_matching
from .certificate import Certificate


def glue(cert1: Certificate, cert2: Certificate, clique: Sequence[int],
         virtual_edges: Iterable[Edge] = ()) -> Certificate:
    """Union of ``cert1`` (over G'_1) and ``cert2`` (over G_2, anchored at ``clique``).

    Arcs and removed edges of ``cert2`` inside the clique are dropped, as are
    all virtual edges.  Since the clique vertices of ``cert2`` only point
    inside the clique and the first of them is a sink, every Eulerian
    subgraph of the union splits into one from each side, so the parity
    differences multiply.
    """
    if cert1.mode is not cert2.mode:
        raise PreconditionError("cannot glue certificates of different modes")
    mode = cert1.mode
    t = tuple(clique)
    tset = set(t)
    t_edges = {edge(a, b) for a, b in combinations(t, 2)}
    virtual = {edge(*e) for e in virtual_edges}
    if not virtual <= t_edges:
        raise PreconditionError("virtual edges must lie inside the clique")
    if tuple(cert2.anchor) != t:
        raise PreconditionError(f"second certificate must be anchored at {t}, got {cert2.anchor}")

    out2 = cert2.out_degrees()
    limits = (0, 1, 2)
    for x, lim in zip(t, limits):
        if out2.get(x, 0) > lim:
            raise PreconditionError(f"clique vertex {x} has out-degree {out2[x]} > {lim} in the second certificate")
    for a, b in cert2.arcs:
        if a in tset and b not in tset:
            raise PreconditionError(f"clique vertex {a} points outside the clique ({a}->{b})")

    e1, e2 = cert1.edges, cert2.edges - t_edges
    if e1 & virtual:
        raise PreconditionError("first certificate uses a virtual edge")
    if e1 & e2:
        raise PreconditionError(f"pieces overlap outside the clique: {sorted(e1 & e2)[:3]}")
    if not tset <= set(cert1.bounds):
        raise PreconditionError("clique vertices missing from the first certificate")
    if set(cert1.bounds) & set(cert2.bounds) != tset:
        raise PreconditionError("pieces must share exactly the clique vertices")

    arcs = set(cert1.arcs) | {a for a in cert2.arcs if edge(*a) not in t_edges}
    removed = set(cert1.removed) | (set(cert2.removed) - t_edges)
    union = Graph(tuple(set(cert1.bounds) | set(cert2.bounds)),
                  frozenset(removed | {edge(*a) for a in arcs}))
    if mode.role == "matching" and not is_matching(union, removed):
        raise PreconditionError("removed sets conflict at the clique: union is not a matching")
    if mode.role == "forest" and not is_forest(union, removed):
        raise PreconditionError("removed sets conflict at the clique: union contains a cycle")

    bounds = {v: b for v, b in cert2.bounds.items() if v not in tset} | dict(cert1.bounds)
    diff = cert1.diff * cert2.diff if cert1.diff is not None and cert2.diff is not None else None
    negative = None
    if cert1.negative is not None or cert2.negative is not None:
        negative = frozenset(cert1.negative or ()) | (frozenset(cert2.negative or ()) - t_edges)
    return replace(cert1, removed=frozenset(removed), arcs=frozenset(arcs), bounds=bounds, diff=diff,
                   acyclic=cert1.acyclic and cert2.acyclic, negative=negative)
