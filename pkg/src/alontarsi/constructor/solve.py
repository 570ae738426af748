"""The top-level recursion: planar and Wagner leaves glued across clique-sums.

``solve`` keeps an anchor (an edge or triangle) whose out-degrees are fixed
by the mode.  Whenever the graph has a valid separator ``S`` of size at most
three, a component ``C`` of ``G - S`` avoiding the anchor is cut off: the
rest ``G - C`` is solved with the same anchor, ``G[C + S]`` with ``S``
completed to a clique is solved with ``S`` itself as anchor, and the two
certificates are glued.
"""
from __future__ import annotations

from dataclasses import replace
from itertools import combinations
from typing import Optional, Sequence

from ..certifier import DEFAULT_ENUMERATION_LIMIT
from ..errors import ContractViolation, K5MinorError, PreconditionError
from ..graph import Graph, Signature, edge
from ..decomposer.decompose import K5Verdict, _decompose, piece, valid_separations
from ..decomposer.planarity import PlaneEmbedding, is_biconnected, planar_embedding
from ..decomposer.wagner import is_wagner
from .certificate import Certificate, Mode, verify_certificate
from .contracts import anchored_search, check_anchor, make_certificate, relabel_anchor
from .glue import glue
from .planar import planar_boundary_cert, triangle_lift
from .wagner import wagner_leaf_cert

# 2-connected planar graphs up to this size are solved as one leaf
PLANAR_LEAF_EDGES = 12


def _restrict(sig: Optional[Signature], g: Graph) -> Optional[Signature]:
    if sig is None:
        return None
    return Signature(g, frozenset(e for e in sig.negative if e in g.edges))


def trivial_certificate(g: Graph, mode: Mode, sig: Optional[Signature] = None) -> Certificate:
    """Edgeless graph: nothing to orient."""
    return make_certificate(g, mode, (), (), {v: 0 for v in g.vertices}, (), sig, check=False)


def _disjoint_union(certs: Sequence[Certificate], first: Certificate) -> Certificate:
    arcs, removed, bounds, negative = set(), set(), {}, set()
    diff = 1
    for c in certs:
        arcs |= c.arcs
        removed |= c.removed
        bounds.update(c.bounds)
        negative |= c.negative or set()
        diff = None if diff is None or c.diff is None else diff * c.diff
    return replace(first, arcs=frozenset(arcs), removed=frozenset(removed), bounds=bounds, diff=diff,
                   acyclic=all(c.acyclic for c in certs),
                   negative=None if first.negative is None else frozenset(negative))


class _Solver:
    def __init__(self, mode: Mode, sig: Optional[Signature], exact_limit: int):
        self.mode = mode
        self.sig = sig
        self.exact_limit = exact_limit
        self.trace: list[str] = []

    def sig_for(self, g: Graph) -> Optional[Signature]:
        return _restrict(self.sig, g)

    def solve(self, g: Graph, anchor: tuple[int, ...]) -> Certificate:
        comps = g.components()
        if len(comps) > 1:
            return self._components(g, anchor, comps)
        if g.vertex_count <= 3:
            self.trace.append(f"base {g.vertices}")
            return anchored_search(g, self.mode, anchor, self.sig_for(g), self.exact_limit)
        emb = planar_embedding(g)
        if emb is not None and g.edge_count <= PLANAR_LEAF_EDGES and is_biconnected(g):
            return self._planar_leaf(g, emb, anchor)
        if emb is None and is_wagner(g):
            self.trace.append(f"wagner {g.vertices}")
            return wagner_leaf_cert(g, anchor, self.mode, self.sig_for(g), self.exact_limit)
        for sep in valid_separations(g):
            side = next((s for s in sep.sides if not set(s) & set(anchor)), None)
            if side is not None:
                return self._split(g, anchor, sep.clique, side)
        if emb is not None and is_biconnected(g):
            return self._planar_leaf(g, emb, anchor)
        raise K5MinorError(K5Verdict(g, "no leaf and no separator avoiding the anchor"))

    def _components(self, g: Graph, anchor, comps) -> Certificate:
        certs, main = [], None
        for comp in comps:
            h = g.induced(comp)
            if set(anchor) <= set(comp):
                main = self.solve(h, anchor)
                certs.append(main)
            elif h.edges:
                sub = self.solve(h, h.sorted_edges[0])
                certs.append(relabel_anchor(sub, ()))
            else:
                certs.append(trivial_certificate(h, self.mode, self.sig_for(h)))
        assert main is not None
        return _disjoint_union(certs, main)

    def _planar_leaf(self, g: Graph, emb: PlaneEmbedding, anchor) -> Certificate:
        sig = self.sig_for(g)
        if len(anchor) == 2:
            self.trace.append(f"planar {g.vertices}")
            face = emb.face_with_edge(*anchor)[0]
            return planar_boundary_cert(emb.with_outer_face(face), face, self.mode, sig, self.exact_limit)
        if emb.is_face(anchor):
            self.trace.append(f"planar-triangle {g.vertices}")
            if self.mode is Mode.AT5:
                # v3 sits on the boundary next to two sinks, so d+(v3) = 2 is forced
                cert = planar_boundary_cert(emb.with_outer_face(anchor), anchor, self.mode, sig, self.exact_limit)
                return relabel_anchor(cert, anchor)
            return triangle_lift(emb.with_outer_face(anchor), anchor, self.mode, sig, self.exact_limit)
        rest = g.induced(v for v in g.vertices if v not in anchor)
        comps = rest.components()
        if len(comps) >= 2:
            self.trace.append(f"separating-triangle {anchor}")
            return self._split(g, anchor, tuple(sorted(anchor)), comps[0])
        self.trace.append(f"search {g.vertices}")
        return anchored_search(g, self.mode, anchor, sig, self.exact_limit)

    def _split(self, g: Graph, anchor, clique: tuple[int, ...], side: tuple[int, ...]) -> Certificate:
        self.trace.append(f"split {clique} | {side}")
        keep = [v for v in g.vertices if v not in set(side)]
        g1 = g.induced(keep)
        g2 = piece(g, clique, side)
        virtual = frozenset(edge(a, b) for a, b in combinations(clique, 2) if not g.has_edge(a, b))
        cert1 = self.solve(g1, anchor)
        if len(clique) >= 2:
            cert2 = self.solve(g2, clique)
        else:
            x = clique[0]
            y = min(v for v in g2.adjacency[x])
            cert2 = self._pendant(self.solve(g2, (x, y)), x, y)
        return glue(cert1, cert2, clique, virtual)

    def _pendant(self, cert: Certificate, x: int, y: int) -> Certificate:
        """Turn an ``(x, y)``-anchored certificate into one anchored at ``x`` alone."""
        removed, arcs = set(cert.removed), set(cert.arcs)
        if edge(x, y) in removed and self.mode is Mode.MATCH_AT4:
            # x must not be covered from this side; y -> x keeps x a sink
            removed.discard(edge(x, y))
            arcs.add((y, x))
        bounds = dict(cert.bounds)
        bounds[y] = self.mode.bound
        bounds[x] = 0
        return replace(cert, removed=frozenset(removed), arcs=frozenset(arcs), bounds=bounds,
                       anchor=(x,), anchor_outdeg=(0,))


def find_k5_verdict(g: Graph) -> Optional[K5Verdict]:
    for comp in g.components():
        out = _decompose(g.induced(comp))
        if isinstance(out, K5Verdict):
            return out
    return None


def solve(g: Graph, mode: Mode = Mode.AT5, anchor: Optional[Sequence[int]] = None,
          sig: Optional[Signature] = None, exact_limit: int = DEFAULT_ENUMERATION_LIMIT,
          trace: Optional[list] = None) -> Certificate:
    """Certificate for a K5-minor-free graph meeting the anchored contract of ``mode``.

    Raises K5MinorError with the offending piece when ``g`` has a K5 minor.
    """
    mode = Mode(mode)
    if sig is not None and sig.base != g:
        sig = _restrict(sig, g)
    verdict = find_k5_verdict(g)
    if verdict is not None:
        raise K5MinorError(verdict)
    if not g.edges:
        return trivial_certificate(g, mode, sig)
    pendant = None
    if anchor is not None and len(tuple(anchor)) == 1:
        # a single sink: solve for the edge to its smallest neighbour, then release that neighbour
        pendant = anchor[0]
        if pendant not in g.adjacency:
            raise PreconditionError(f"anchor vertex {pendant} is not in the graph")
        nbrs = g.adjacency[pendant]
        anchor = (pendant, min(nbrs)) if nbrs else None
    anchor = check_anchor(g, g.sorted_edges[0] if anchor is None else anchor)
    solver = _Solver(mode, sig, exact_limit)
    cert = solver.solve(g, anchor)
    if pendant is not None:
        if pendant in anchor:
            cert = solver._pendant(cert, *anchor)
        else:
            cert = replace(cert, bounds={**cert.bounds, pendant: 0})
        anchor = (pendant,)
    if trace is not None:
        trace.extend(solver.trace)
    product = cert.diff
    cert = make_certificate(g, mode, cert.removed, cert.arcs, cert.bounds, anchor, sig, exact_limit, check=False)
    if cert.diff is None and product is not None:
        # too large to recount; keep the product of the verified pieces
        cert = replace(cert, diff=product)
    verdict = verify_certificate(g, cert, exact_limit, sig)
    if not verdict.accepted:
        raise ContractViolation(f"solve produced a rejected certificate: {verdict.reason}")
    return cert
