"""Constrained search for (removed set, orientation) pairs.

Every edge is either oriented one way, oriented the other way, or removed
(matching / forest modes only).  The search backtracks over edges in a fixed
order with incremental checks on out-degree caps, exact out-degrees, the
removed-set role and, if requested, acyclicity.  A first pass looks only for
acyclic orientations (parity difference 1 for free) within a node budget;
the second pass accepts any orientation whose Eulerian parity difference is
nonzero.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Optional

from ..certifier import eulerian_diff
from ..errors import ContractViolation, ResourceLimitError
from ..graph import Arc, Edge, Graph, Orientation, Signature, edge

DEFAULT_SEARCH_BUDGET = 2_000_000
ACYCLIC_FIRST_BUDGET = 50_000


@dataclass(frozen=True)
class Constraints:
    caps: Mapping[int, int]
    exact: Mapping[int, int] = field(default_factory=dict)
    removal: str = "plain"  # "plain", "matching" or "forest"
    keep: frozenset[Edge] = frozenset()  # edges that may not be removed
    uncovered: frozenset[int] = frozenset()  # vertices no removed edge may touch
    shared: Mapping[int, int] = field(default_factory=dict)  # cap on out-degree + removed degree
    acyclic: bool = False


class _OutOfBudget(Exception):
    pass


def _peel_order(g: Graph, cons: Constraints) -> list[int]:
    """Greedy elimination order: repeatedly take the vertex whose remaining
    degree fits its cap best; it will point at the vertices still present."""
    rem = {v: set(g.adjacency[v]) for v in g.vertices}
    order = []
    while rem:
        def slack(v):
            target = cons.exact.get(v, cons.caps[v])
            return (len(rem[v]) - target, v in cons.exact, v)
        v = min(rem, key=slack)
        order.append(v)
        for x in rem.pop(v):
            rem[x].discard(v)
    return order  # order[0] is peeled first and has the largest out-set among remaining


class _Search:
    def __init__(self, g: Graph, cons: Constraints, sig: Optional[Signature], budget: int):
        self.g = g
        self.cons = cons
        self.sig = sig
        self.budget = budget
        self.nodes = 0
        order = _peel_order(g, cons)
        rank = {v: i for i, v in enumerate(order)}
        # vertices peeled first point into the rest; edges are visited vertex by vertex
        self.edges: list[tuple[int, int]] = sorted(
            ((a, b) if rank[a] < rank[b] else (b, a) for a, b in g.edges),
            key=lambda ab: (rank[ab[0]], rank[ab[1]]))
        self.out = {v: 0 for v in g.vertices}
        self.mdeg = {v: 0 for v in g.vertices}
        self.undecided = {v: g.degree(v) for v in g.vertices}
        self.succ: dict[int, list[int]] = {v: [] for v in g.vertices}
        self.parent = {v: v for v in g.vertices}
        self.size = {v: 1 for v in g.vertices}
        self.history: list = []
        self.removed: list[Edge] = []
        self.arcs: list[Arc] = []

    # -- forest bookkeeping with rollback ----------------------------------

    def _find(self, x: int) -> int:
        while self.parent[x] != x:
            x = self.parent[x]
        return x

    def _union(self, a: int, b: int) -> bool:
        ra, rb = self._find(a), self._find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        self.history.append((ra, rb))
        return True

    def _undo_union(self):
        ra, rb = self.history.pop()
        self.parent[rb] = rb
        self.size[ra] -= self.size[rb]

    # -- feasibility --------------------------------------------------------

    def _reaches(self, src: int, dst: int) -> bool:
        stack, seen = [src], {src}
        while stack:
            x = stack.pop()
            if x == dst:
                return True
            for y in self.succ[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return False

    def _vertex_ok(self, v: int) -> bool:
        cons = self.cons
        o = self.out[v]
        if o > cons.caps[v]:
            return False
        if v in cons.shared and o + self.mdeg[v] > cons.shared[v]:
            return False
        if v in cons.exact:
            want = cons.exact[v]
            if o > want or o + self.undecided[v] < want:
                return False
        return True

    def _orient_ok(self, t: int, h: int, acyclic: bool) -> bool:
        self.out[t] += 1
        self.undecided[t] -= 1
        self.undecided[h] -= 1
        ok = self._vertex_ok(t) and self._vertex_ok(h)
        self.out[t] -= 1
        self.undecided[t] += 1
        self.undecided[h] += 1
        if ok and acyclic:
            ok = not self._reaches(h, t)
        return ok

    # -- main recursion -----------------------------------------------------

    def run(self, acyclic: bool) -> Optional[tuple[frozenset[Edge], frozenset[Arc]]]:
        self.acyclic = acyclic
        if self._rec(0):
            return frozenset(self.removed), frozenset(self.arcs)
        return None

    def _leaf_ok(self) -> bool:
        if self.acyclic:
            return True
        rest = Graph(self.g.vertices, self.g.edges - frozenset(self.removed))
        d = Orientation(rest, self.arcs)
        if d.topological_order() is not None:
            return True
        sig = self.sig.restrict(rest) if self.sig is not None else None
        return eulerian_diff(d, sig, limit=max(len(self.arcs), 1)).diff != 0

    def _rec(self, i: int) -> bool:
        self.nodes += 1
        if self.nodes > self.budget:
            raise _OutOfBudget()
        if i == len(self.edges):
            return self._leaf_ok()
        a, b = self.edges[i]
        for choice in self._choices(a, b):
            if choice == "remove":
                if self._try_remove(i, a, b):
                    return True
            else:
                t, h = choice
                if self._orient_ok(t, h, self.acyclic):
                    self._apply_arc(t, h)
                    if self._rec(i + 1):
                        return True
                    self._undo_arc(t, h)
        return False

    def _choices(self, a: int, b: int):
        yield (a, b)
        if self.cons.removal != "plain":
            yield "remove"
        yield (b, a)

    def _apply_arc(self, t: int, h: int):
        self.out[t] += 1
        self.undecided[t] -= 1
        self.undecided[h] -= 1
        self.succ[t].append(h)
        self.arcs.append((t, h))

    def _undo_arc(self, t: int, h: int):
        self.arcs.pop()
        self.succ[t].pop()
        self.out[t] -= 1
        self.undecided[t] += 1
        self.undecided[h] += 1

    def _try_remove(self, i: int, a: int, b: int) -> bool:
        cons = self.cons
        e = edge(a, b)
        if e in cons.keep or a in cons.uncovered or b in cons.uncovered:
            return False
        if cons.removal == "matching" and (self.mdeg[a] or self.mdeg[b]):
            return False
        merged = False
        if cons.removal == "forest":
            if not self._union(a, b):
                return False
            merged = True
        self.mdeg[a] += 1
        self.mdeg[b] += 1
        self.undecided[a] -= 1
        self.undecided[b] -= 1
        self.removed.append(e)
        if self._vertex_ok(a) and self._vertex_ok(b) and self._rec(i + 1):
            return True
        self.removed.pop()
        self.mdeg[a] -= 1
        self.mdeg[b] -= 1
        self.undecided[a] += 1
        self.undecided[b] += 1
        if merged:
            self._undo_union()
        return False


def constrained_search(g: Graph, cons: Constraints, sig: Optional[Signature] = None,
                       budget: int = DEFAULT_SEARCH_BUDGET) -> tuple[frozenset[Edge], frozenset[Arc]]:
    """Find ``(removed, arcs)`` satisfying ``cons`` with a nonzero parity difference.

    Raises ContractViolation when the space is exhausted and
    ResourceLimitError when ``budget`` search nodes are not enough.
    """
    missing = [v for v in g.vertices if v not in cons.caps]
    if missing:
        raise ValueError(f"no out-degree cap for vertices {missing}")
    if not cons.acyclic:
        try:
            found = _Search(g, cons, sig, min(budget, ACYCLIC_FIRST_BUDGET)).run(acyclic=True)
        except _OutOfBudget:
            found = None
        if found is not None:
            return found
    try:
        found = _Search(g, cons, sig, budget).run(acyclic=cons.acyclic)
    except _OutOfBudget:
        raise ResourceLimitError(f"constrained search exceeded {budget} nodes on "
                                 f"{g.vertex_count} vertices / {g.edge_count} edges") from None
    if found is None:
        raise ContractViolation(f"no orientation meets the constraints on vertices {list(g.vertices)}")
    return found
