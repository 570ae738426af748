"""Certificates for Alon-Tarsi bounds and their independent verification.

A certificate names a set of removed edges (empty, a matching or a forest),
an orientation of the remaining graph and per-vertex out-degree bounds.  If
it verifies, the remaining graph has an orientation with maximum out-degree
``k`` and a nonzero Eulerian parity difference, hence Alon-Tarsi number at
most ``k + 1``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Mapping, Optional

from ..certifier import DEFAULT_ENUMERATION_LIMIT, eulerian_diff
from ..errors import MalformedInputError
from ..graph import Arc, Edge, Graph, Orientation, Signature, edge, is_forest, is_matching


class Mode(str, Enum):
    AT5 = "at5"
    MATCH_AT4 = "at4-matching"
    FOREST_AT3 = "at3-forest"

    @property
    def bound(self) -> int:
        """Global maximum out-degree of the certified orientation."""
        return {"at5": 4, "at4-matching": 3, "at3-forest": 2}[self.value]

    @property
    def role(self) -> str:
        return {"at5": "plain", "at4-matching": "matching", "at3-forest": "forest"}[self.value]

    @property
    def anchor_pattern(self) -> tuple[int, int, int]:
        """Exact out-degrees prescribed for an anchor ``(u, v[, w])``."""
        return {"at5": (0, 1, 2), "at4-matching": (0, 0, 2), "at3-forest": (0, 0, 1)}[self.value]


@dataclass(frozen=True)
class Certificate:
    mode: Mode
    removed: frozenset[Edge]
    arcs: frozenset[Arc]
    bounds: Mapping[int, int]
    anchor: tuple[int, ...] = ()
    anchor_outdeg: tuple[int, ...] = ()
    diff: Optional[int] = None
    acyclic: bool = False
    negative: Optional[frozenset[Edge]] = field(default=None)  # set iff the certificate is signed

    def __post_init__(self):
        object.__setattr__(self, "mode", Mode(self.mode))
        object.__setattr__(self, "removed", frozenset(edge(*e) for e in self.removed))
        object.__setattr__(self, "arcs", frozenset(tuple(a) for a in self.arcs))
        object.__setattr__(self, "bounds", dict(sorted(self.bounds.items())))

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(self.bounds)

    @property
    def edges(self) -> frozenset[Edge]:
        return self.removed | {edge(*a) for a in self.arcs}

    def out_degrees(self) -> dict[int, int]:
        out = {v: 0 for v in self.bounds}
        for t, _ in self.arcs:
            out[t] = out.get(t, 0) + 1
        return out

    def max_out_degree(self) -> int:
        return max(self.out_degrees().values(), default=0)

    def remaining_graph(self, g: Graph) -> Graph:
        return Graph(g.vertices, g.edges - self.removed)

    def orientation(self, g: Graph) -> Orientation:
        return Orientation(self.remaining_graph(g), self.arcs)

    def signature(self, g: Graph) -> Optional[Signature]:
        if self.negative is None:
            return None
        return Signature(g, self.negative & g.edges)

    def with_signature(self, sig: Optional[Signature]) -> "Certificate":
        return replace(self, negative=None if sig is None else frozenset(sig.negative))

    # -- serialisation ------------------------------------------------------

    def to_dict(self) -> dict:
        out = {
            "acyclic": bool(self.acyclic),
            "anchor": ({"outdeg": list(self.anchor_outdeg), "vertices": list(self.anchor)}
                       if self.anchor else None),
            "arcs": sorted([list(a) for a in self.arcs]),
            "bounds": [[v, b] for v, b in sorted(self.bounds.items())],
            "diff": self.diff,
            "mode": self.mode.value,
            "removed": sorted([list(e) for e in self.removed]),
        }
        if self.negative is not None:
            out["signed"] = [[u, v, -1 if (u, v) in self.negative else 1] for u, v in sorted(self.edges)]
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"

    @classmethod
    def from_dict(cls, data: dict) -> "Certificate":
        try:
            anchor = data.get("anchor") or {}
            negative = None
            if data.get("signed") is not None:
                negative = frozenset(edge(u, v) for u, v, s in data["signed"] if int(s) < 0)
            return cls(
                mode=Mode(data["mode"]),
                removed=frozenset(edge(int(u), int(v)) for u, v in data["removed"]),
                arcs=frozenset((int(t), int(h)) for t, h in data["arcs"]),
                bounds={int(v): int(b) for v, b in data["bounds"]},
                anchor=tuple(int(x) for x in anchor.get("vertices", ())),
                anchor_outdeg=tuple(int(x) for x in anchor.get("outdeg", ())),
                diff=None if data.get("diff") is None else int(data["diff"]),
                acyclic=bool(data.get("acyclic", False)),
                negative=negative,
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise MalformedInputError(f"malformed certificate: {exc}") from exc

    @classmethod
    def from_json(cls, text: str) -> "Certificate":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise MalformedInputError(f"certificate is not valid JSON: {exc}") from exc
        return cls.from_dict(data)


@dataclass(frozen=True)
class Verdict:
    accepted: bool
    reason: str
    checks: tuple[str, ...] = ()

    def __bool__(self):
        return self.accepted


def verify_certificate(g: Graph, cert: Certificate, exact_limit: int = DEFAULT_ENUMERATION_LIMIT,
                       sig: Optional[Signature] = None) -> Verdict:
    """Re-check every claim of ``cert`` against ``g`` from scratch.

    Checks run in order: removed-set role, orientation totality, out-degree
    bounds, anchor out-degrees, acyclicity, and the nonzero parity difference
    (skipped when the remaining graph has more than ``exact_limit`` edges and
    no acyclicity argument applies).
    """
    checks: list[str] = []

    def reject(reason: str) -> Verdict:
        return Verdict(False, reason, tuple(checks))

    mode = cert.mode
    if sig is None:
        sig = cert.signature(g)
    elif cert.negative is not None and frozenset(cert.negative) != sig.negative:
        return reject("certificate signature disagrees with the supplied signature")

    # removed-set role
    if not cert.removed <= g.edges:
        return reject("removed set contains edges outside the graph")
    if mode.role == "plain" and cert.removed:
        return reject("mode at5 removes no edges")
    if mode.role == "matching" and not is_matching(g, cert.removed):
        return reject("removed set is not a matching")
    if mode.role == "forest" and not is_forest(g, cert.removed):
        return reject("removed set contains a cycle")
    checks.append("removed-role")

    # orientation totality
    rest = g.edges - cert.removed
    arc_edges = [edge(*a) for a in cert.arcs]
    if any(a[0] == a[1] for a in cert.arcs):
        return reject("orientation contains a loop")
    if len(arc_edges) != len(set(arc_edges)):
        return reject("an edge is oriented twice")
    if set(arc_edges) != rest:
        missing = sorted(rest - set(arc_edges))
        extra = sorted(set(arc_edges) - rest)
        return reject(f"orientation does not cover G minus removed (missing {missing[:3]}, extra {extra[:3]})")
    checks.append("orientation")

    # bounds
    if set(cert.bounds) != set(g.vertices):
        return reject("bounds must list every vertex")
    out = {v: 0 for v in g.vertices}
    for t, _ in cert.arcs:
        out[t] += 1
    for v in g.vertices:
        b = cert.bounds[v]
        if b > mode.bound or b < 0:
            return reject(f"bound {b} at vertex {v} exceeds the mode bound {mode.bound}")
        if out[v] > b:
            return reject(f"bound violation: vertex {v} has out-degree {out[v]} > {b}")
    checks.append("bounds")

    # anchor
    if cert.anchor:
        a = cert.anchor
        if len(set(a)) != len(a) or not 1 <= len(a) <= 3 or not set(a) <= set(g.vertices):
            return reject("anchor must be 1 to 3 distinct vertices of the graph")
        if not g.is_clique(a):
            return reject("anchor vertices are not pairwise adjacent")
        if tuple(cert.anchor_outdeg) != mode.anchor_pattern[:len(a)]:
            return reject(f"anchor out-degrees {list(cert.anchor_outdeg)} do not match mode {mode.value}")
        for v, want in zip(a, cert.anchor_outdeg):
            if out[v] != want:
                return reject(f"anchor vertex {v} has out-degree {out[v]}, expected {want}")
        if len(a) == 3:
            u, _, w = a
            if mode is Mode.MATCH_AT4 and any(w in e for e in cert.removed):
                return reject("matching covers the anchor vertex w")
            if mode is Mode.FOREST_AT3 and edge(u, w) in cert.removed:
                return reject("forest contains the anchor edge uw")
        checks.append("anchor")

    d = Orientation(Graph(g.vertices, frozenset(rest)), cert.arcs)
    acyclic = d.topological_order() is not None
    if (mode is Mode.FOREST_AT3 or cert.acyclic) and not acyclic:
        return reject("orientation has a directed cycle")
    if mode is Mode.FOREST_AT3 or cert.acyclic:
        checks.append("acyclic")

    if acyclic:
        value = 1
        checks.append("diff:acyclic")
    elif len(rest) <= exact_limit:
        value = eulerian_diff(d, sig.restrict(d.base) if sig is not None else None, limit=exact_limit).diff
        checks.append("diff:exact")
        if value == 0:
            return reject("diff = 0: even and odd Eulerian subgraphs cancel")
    else:
        checks.append("diff:skipped")
        return Verdict(True, f"accepted (structural checks only; {len(rest)} edges > exact limit {exact_limit})",
                       tuple(checks))
    if cert.diff is not None and cert.diff != value:
        return reject(f"claimed diff {cert.diff} but computed {value}")
    return Verdict(True, "accepted", tuple(checks))
