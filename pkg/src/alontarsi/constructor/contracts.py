"""Out-degree contracts and the helper that turns a search result into a
verified certificate."""
from __future__ import annotations

from typing import Mapping, Optional, Sequence

from ..certifier import DEFAULT_ENUMERATION_LIMIT, eulerian_diff
from ..errors import ContractViolation, PreconditionError
from ..graph import Arc, Edge, Graph, Orientation, Signature, edge
from .certificate import Certificate, Mode, verify_certificate
from .search import Constraints, constrained_search


def check_anchor(g: Graph, anchor: Sequence[int]) -> tuple[int, ...]:
    anchor = tuple(anchor)
    if len(anchor) not in (2, 3) or len(set(anchor)) != len(anchor):
        raise PreconditionError(f"anchor must be an edge or a triangle, got {anchor}")
    if not set(anchor) <= set(g.vertices) or not g.is_clique(anchor):
        raise PreconditionError(f"anchor {anchor} is not an edge/triangle of the graph")
    return anchor


def anchored_constraints(g: Graph, mode: Mode, anchor: Sequence[int]) -> Constraints:
    """The clique-sum contract: anchor out-degrees fixed, everything else at most k."""
    pattern = mode.anchor_pattern[:len(anchor)]
    exact = dict(zip(anchor, pattern))
    caps = {v: exact.get(v, mode.bound) for v in g.vertices}
    uncovered: frozenset[int] = frozenset()
    keep: frozenset[Edge] = frozenset()
    if len(anchor) == 3 and mode is Mode.MATCH_AT4:
        uncovered = frozenset({anchor[2]})
    if len(anchor) == 3 and mode is Mode.FOREST_AT3:
        keep = frozenset({edge(anchor[0], anchor[2])})
    return Constraints(caps=caps, exact=exact, removal=mode.role, keep=keep, uncovered=uncovered,
                       acyclic=mode is Mode.FOREST_AT3)


def anchored_bounds(g: Graph, mode: Mode, anchor: Sequence[int]) -> dict[int, int]:
    b = {v: mode.bound for v in g.vertices}
    b.update(zip(anchor, mode.anchor_pattern))
    return b


def make_certificate(g: Graph, mode: Mode, removed, arcs, bounds: Mapping[int, int],
                     anchor: Sequence[int] = (), sig: Optional[Signature] = None,
                     exact_limit: int = DEFAULT_ENUMERATION_LIMIT, check: bool = True) -> Certificate:
    """Assemble a certificate, fill in ``acyclic`` and ``diff``, and verify it."""
    removed = frozenset(edge(*e) for e in removed)
    arcs = frozenset(arcs)
    d = Orientation(Graph(g.vertices, g.edges - removed), arcs)
    acyclic = d.topological_order() is not None
    if acyclic:
        diff: Optional[int] = 1
    elif len(arcs) <= exact_limit:
        diff = eulerian_diff(d, sig.restrict(d.base) if sig is not None else None, limit=exact_limit).diff
    else:
        diff = None
    anchor = tuple(anchor)
    cert = Certificate(mode, removed, arcs, dict(bounds), anchor, tuple(mode.anchor_pattern[:len(anchor)]),
                       diff, acyclic, None if sig is None else frozenset(sig.negative & g.edges))
    if check:
        verdict = verify_certificate(g, cert, exact_limit, sig)
        if not verdict.accepted:
            raise ContractViolation(f"constructed certificate rejected: {verdict.reason}")
    return cert


def anchored_search(g: Graph, mode: Mode, anchor: Sequence[int], sig: Optional[Signature] = None,
                    exact_limit: int = DEFAULT_ENUMERATION_LIMIT) -> Certificate:
    """Meet the anchored contract on ``g`` directly by constrained search."""
    anchor = check_anchor(g, anchor)
    removed, arcs = constrained_search(g, anchored_constraints(g, mode, anchor), sig)
    return make_certificate(g, mode, removed, arcs, anchored_bounds(g, mode, anchor), anchor, sig, exact_limit)


def relabel_anchor(cert: Certificate, anchor: Sequence[int]) -> Certificate:
    """Re-annotate ``cert`` with a longer/shorter anchor whose out-degrees it already meets."""
    from dataclasses import replace
    anchor = tuple(anchor)
    pattern = cert.mode.anchor_pattern[:len(anchor)]
    bounds = dict(cert.bounds)
    for v in set(cert.anchor) - set(anchor):
        bounds[v] = cert.mode.bound
    bounds.update(zip(anchor, pattern))
    return replace(cert, anchor=anchor, anchor_outdeg=tuple(pattern), bounds=bounds)


def arcs_out_of(arcs, v: int) -> list[Arc]:
    return [a for a in arcs if a[0] == v]
