"""The Wagner leaf of the recursion.

W has no triangles, so the anchor is an edge.  Up to symmetry it is either a
diagonal (u1 u5) or a rim edge (u5 u6).  In the matching and forest modes the
anchor edge and the two far rim edges u2 u3, u7 u8 are removed; this set is a
matching and a forest at once.
"""
from __future__ import annotations

from typing import Optional, Sequence

from ..certifier import DEFAULT_ENUMERATION_LIMIT
from ..errors import ContractViolation, PreconditionError
from ..graph import Graph, Signature, edge
from ..decomposer.wagner import wagner_isomorphisms
from .certificate import Certificate, Mode
from .contracts import make_certificate
from .search import Constraints, constrained_search

# canonical labels: u_i is vertex i - 1
DIAGONAL_ANCHOR = (0, 4)  # u1 u5
RIM_ANCHOR = (4, 5)  # u5 u6
FAR_EDGES = ((1, 2), (6, 7))  # u2 u3 and u7 u8


def wagner_leaf_cert(w: Graph, anchor: Sequence[int], mode: Mode = Mode.AT5, sig: Optional[Signature] = None,
                     exact_limit: int = DEFAULT_ENUMERATION_LIMIT) -> Certificate:
    mode = Mode(mode)
    u, v = anchor = tuple(anchor)
    if not w.has_edge(u, v):
        raise PreconditionError(f"anchor {anchor} is not an edge of the graph")
    found_iso = False
    for phi in wagner_isomorphisms(w):
        image = {phi[a]: a for a in phi}
        pair = edge(image[u], image[v])
        if pair not in (DIAGONAL_ANCHOR, RIM_ANCHOR):
            continue
        found_iso = True
        if mode is Mode.AT5:
            removed = frozenset()
            cons = Constraints(caps={x: 3 for x in w.vertices} | {u: 0, v: 1}, exact={u: 0, v: 1}, acyclic=True)
        else:
            removed = frozenset({edge(u, v)} | {edge(phi[a], phi[b]) for a, b in FAR_EDGES})
            cons = Constraints(caps={x: 2 for x in w.vertices} | {u: 0, v: 0}, exact={u: 0, v: 0}, acyclic=True)
        rest = Graph(w.vertices, w.edges - removed)
        try:
            _, arcs = constrained_search(rest, cons)
        except ContractViolation:
            continue
        bounds = dict(cons.caps)
        return make_certificate(w, mode, removed, arcs, bounds, anchor, sig, exact_limit)
    if not found_iso:
        raise PreconditionError("graph is not isomorphic to the Wagner graph")
    raise ContractViolation(f"no Wagner leaf certificate for anchor {anchor} in mode {mode.value}")
