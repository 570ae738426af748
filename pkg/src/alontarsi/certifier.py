"""Exact algebraic oracles for graph polynomials and their orientations.

Everything here is integer arithmetic.  The two central quantities are

* the number of even minus odd spanning Eulerian sub-digraphs of an
  orientation (edges counted, or positive edges counted for a signed graph),
* the coefficient of a monomial in ``prod_{u<v, uv in E} (x_u - s_uv x_v)``,

which agree up to sign whenever the monomial's exponents are the orientation's
out-degrees.  They are computed by unrelated routes so one can check the other.
"""
from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence, Union

from .errors import MalformedInputError, PreconditionError, ResourceLimitError
from .graph import Graph, Orientation, Signature, degeneracy_order

DEFAULT_ENUMERATION_LIMIT = 30
DEFAULT_AT_LIMIT = 20
DEFAULT_COLORING_LIMIT = 10**7


@dataclass(frozen=True)
class ParityCount:
    even_count: int
    odd_count: int

    @property
    def diff(self) -> int:
        return self.even_count - self.odd_count


def _frontier_order(g: Graph) -> list[int]:
    """Vertex order that keeps few vertices half-processed during edge sweeps."""
    if not g.edges:
        return list(g.vertices)
    order: list[int] = []
    placed: set[int] = set()
    seen: set[int] = set()
    for comp in g.components():
        start = min(comp, key=lambda v: (g.degree(v), v))
        frontier = [start]
        seen.add(start)
        while frontier:
            # next vertex: the one with most already-ordered neighbours
            v = max(frontier, key=lambda x: (len(g.adjacency[x] & placed), -x))
            frontier.remove(v)
            order.append(v)
            placed.add(v)
            for w in sorted(g.adjacency[v]):
                if w not in seen:
                    seen.add(w)
                    frontier.append(w)
    return order


def _sweep(g: Graph, items: Sequence[tuple[int, int]]) -> list[tuple[int, int]]:
    order = _frontier_order(g)
    pos = {v: i for i, v in enumerate(order)}
    return sorted(items, key=lambda a: (max(pos[a[0]], pos[a[1]]), min(pos[a[0]], pos[a[1]]), a))


def _check_sig(base: Graph, sig: Optional[Signature]) -> Optional[Signature]:
    if sig is None:
        return None
    if sig.base != base:
        if not base.edges <= sig.base.edges:
            raise PreconditionError("signature does not cover the orientation's edges")
        sig = sig.restrict(base)
    return sig


def eulerian_diff(d: Orientation, sig: Optional[Signature] = None,
                  limit: int = DEFAULT_ENUMERATION_LIMIT) -> ParityCount:
    """Count spanning Eulerian sub-digraphs of ``d`` by parity.

    Parity is the number of arcs, or with ``sig`` the number of positive arcs.
    The sweep processes arcs in a frontier order and keeps, per partial
    imbalance vector of the half-processed vertices, the (even, odd) counts;
    states that can no longer balance are dropped.
    """
    m = len(d.arcs)
    if m > limit:
        raise ResourceLimitError(f"{m} edges exceeds the enumeration limit {limit}")
    sig = _check_sig(d.base, sig)
    arcs = _sweep(d.base, list(d.arcs))
    rem_out = Counter(t for t, _ in arcs)
    rem_in = Counter(h for _, h in arcs)
    active: list[int] = []
    slot: dict[int, int] = {}
    states: dict[tuple[int, ...], tuple[int, int]] = {(): (1, 0)}

    def ok(v: int, b: int) -> bool:
        return rem_in[v] >= b if b > 0 else rem_out[v] >= -b

    for t, h in arcs:
        for v in (t, h):
            if v not in slot:
                slot[v] = len(active)
                active.append(v)
                states = {k + (0,): c for k, c in states.items()}
        rem_out[t] -= 1
        rem_in[h] -= 1
        flip = sig is None or sig.sign(t, h) > 0
        it, ih = slot[t], slot[h]
        nxt: dict[tuple[int, ...], list[int]] = defaultdict(lambda: [0, 0])
        for key, (ev, od) in states.items():
            if ok(t, key[it]) and ok(h, key[ih]):
                acc = nxt[key]
                acc[0] += ev
                acc[1] += od
            bt, bh = key[it] + 1, key[ih] - 1
            if ok(t, bt) and ok(h, bh):
                k2 = list(key)
                k2[it], k2[ih] = bt, bh
                acc = nxt[tuple(k2)]
                if flip:
                    acc[0] += od
                    acc[1] += ev
                else:
                    acc[0] += ev
                    acc[1] += od
        states = {k: (c[0], c[1]) for k, c in nxt.items() if c[0] or c[1]}
        done = [v for v in (t, h) if rem_in[v] == 0 and rem_out[v] == 0]
        for v in sorted(set(done), key=lambda x: -slot[x]):
            i = slot.pop(v)
            active.pop(i)
            for w in active[i:]:
                slot[w] -= 1
            merged: dict[tuple[int, ...], list[int]] = defaultdict(lambda: [0, 0])
            for k, (ev, od) in states.items():
                acc = merged[k[:i] + k[i + 1:]]
                acc[0] += ev
                acc[1] += od
            states = {k: (c[0], c[1]) for k, c in merged.items()}
    ev, od = states.get(tuple(0 for _ in active), (0, 0))
    return ParityCount(ev, od)


def is_at_orientation(d: Orientation, sig: Optional[Signature] = None,
                      limit: int = DEFAULT_ENUMERATION_LIMIT) -> bool:
    return eulerian_diff(d, sig, limit).diff != 0


ExponentVector = Union[Sequence[int], Mapping[int, int]]


def _exponents(g: Graph, e: ExponentVector) -> dict[int, int]:
    if isinstance(e, Mapping):
        out = {v: int(e.get(v, 0)) for v in g.vertices}
        if set(e) - set(g.vertices):
            raise MalformedInputError("exponent vector names unknown vertices")
    else:
        if len(e) != g.vertex_count:
            raise MalformedInputError(f"exponent vector has length {len(e)}, graph has {g.vertex_count} vertices")
        out = dict(zip(g.vertices, (int(x) for x in e)))
    if any(x < 0 for x in out.values()):
        raise MalformedInputError("exponents must be nonnegative")
    return out


def coeff_of_monomial(g: Graph, e: ExponentVector, sig: Optional[Signature] = None) -> int:
    """Coefficient of ``prod x_v^e(v)`` in the (signed) graph polynomial of ``g``.

    Each term of the expansion picks ``x_u`` or ``-s_uv x_v`` from every factor
    ``(x_u - s_uv x_v)``, ``u < v``: an orientation whose out-degrees are the
    exponents, weighted by ``-s_uv`` for every edge pointing from the larger
    to the smaller endpoint.  Orientations are summed by an edge sweep keyed on
    the remaining out-degree demand of the half-processed vertices.
    """
    need = _exponents(g, e)
    sig = _check_sig(g, sig)
    if sum(need.values()) != g.edge_count:
        return 0
    if any(need[v] > g.degree(v) for v in g.vertices):
        return 0
    es = _sweep(g, g.sorted_edges)
    rem = Counter()
    for u, v in es:
        rem[u] += 1
        rem[v] += 1
    active: list[int] = []
    slot: dict[int, int] = {}
    states: dict[tuple[int, ...], int] = {(): 1}
    for u, v in es:
        for x in (u, v):
            if x not in slot:
                slot[x] = len(active)
                active.append(x)
                states = {k + (need[x],): c for k, c in states.items()}
        rem[u] -= 1
        rem[v] -= 1
        back = -(sig.sign(u, v) if sig is not None else 1)
        iu, iv = slot[u], slot[v]
        nxt: dict[tuple[int, ...], int] = defaultdict(int)
        for key, c in states.items():
            # u -> v: x_u chosen
            if key[iu] >= 1 and key[iu] - 1 <= rem[u] and key[iv] <= rem[v]:
                k2 = list(key)
                k2[iu] -= 1
                nxt[tuple(k2)] += c
            # v -> u: -s x_v chosen
            if key[iv] >= 1 and key[iv] - 1 <= rem[v] and key[iu] <= rem[u]:
                k2 = list(key)
                k2[iv] -= 1
                nxt[tuple(k2)] += back * c
        states = {k: c for k, c in nxt.items() if c}
        for x in sorted({x for x in (u, v) if rem[x] == 0}, key=lambda y: -slot[y]):
            i = slot.pop(x)
            active.pop(i)
            for w in active[i:]:
                slot[w] -= 1
            merged: dict[tuple[int, ...], int] = defaultdict(int)
            for k, c in states.items():
                if k[i] == 0:
                    merged[k[:i] + k[i + 1:]] += c
            states = dict(merged)
    return states.get(tuple(0 for _ in active), 0)


def _orientation_classes(g: Graph, cap: int, sig: Optional[Signature]):
    """Map every out-degree vector with all entries <= cap to its coefficient."""
    idx = {v: i for i, v in enumerate(g.vertices)}
    states: dict[tuple[int, ...], int] = {tuple(0 for _ in g.vertices): 1}
    for u, v in _sweep(g, g.sorted_edges):
        iu, iv = idx[u], idx[v]
        back = -(sig.sign(u, v) if sig is not None else 1)
        nxt: dict[tuple[int, ...], int] = defaultdict(int)
        for key, c in states.items():
            if key[iu] < cap:
                k2 = list(key)
                k2[iu] += 1
                nxt[tuple(k2)] += c
            if key[iv] < cap:
                k2 = list(key)
                k2[iv] += 1
                nxt[tuple(k2)] += back * c
        states = nxt
    return states


def alon_tarsi_witness(g: Graph, sig: Optional[Signature] = None,
                       limit: int = DEFAULT_AT_LIMIT) -> tuple[int, dict[int, int]]:
    """Least ``k`` and an exponent vector below ``k`` with nonzero coefficient."""
    if g.edge_count > limit:
        raise ResourceLimitError(f"{g.edge_count} edges exceeds the Alon-Tarsi search limit {limit}")
    sig = _check_sig(g, sig)
    if not g.edges:
        return 1, {v: 0 for v in g.vertices}
    k = max(2, -(-g.edge_count // max(1, g.vertex_count)) + 1)
    while True:
        classes = _orientation_classes(g, k - 1, sig)
        hits = sorted(vec for vec, c in classes.items() if c)
        if hits:
            return k, dict(zip(g.vertices, hits[0]))
        k += 1


def alon_tarsi_number(g: Graph, sig: Optional[Signature] = None, limit: int = DEFAULT_AT_LIMIT) -> int:
    """Least ``k`` such that some orientation with max out-degree ``< k`` has nonzero parity difference.

    Orientations sharing an out-degree vector are grouped: their parity
    differences agree up to sign with that vector's polynomial coefficient,
    so one nonzero coefficient settles the level.
    """
    return alon_tarsi_witness(g, sig, limit)[0]


def degeneracy_bound(g: Graph) -> int:
    return degeneracy_order(g)[1] + 1


# -- list colouring --------------------------------------------------------

def signed_color_set(k: int) -> tuple[int, ...]:
    """The symmetric palette of size ``k``: ``{0, +-1..+-q}`` for odd ``k``, ``{+-1..+-q}`` for even."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    q = k // 2
    colors = [c for i in range(1, q + 1) for c in (-i, i)]
    if k % 2:
        colors.append(0)
    return tuple(sorted(colors))


def _lists(g: Graph, lists: Mapping[int, Iterable[int]]) -> dict[int, tuple[int, ...]]:
    out = {}
    for v in g.vertices:
        if v not in lists:
            raise MalformedInputError(f"vertex {v} has no list")
        colors = tuple(sorted(set(lists[v])))
        if not colors:
            raise MalformedInputError(f"vertex {v} has an empty list")
        out[v] = colors
    return out


def is_proper_coloring(g: Graph, coloring: Mapping[int, int], sig: Optional[Signature] = None) -> bool:
    for u, v in g.edges:
        s = sig.sign(u, v) if sig is not None else 1
        if coloring[u] == s * coloring[v]:
            return False
    return True


def find_list_coloring(g: Graph, lists: Mapping[int, Iterable[int]], sig: Optional[Signature] = None,
                       limit: int = DEFAULT_COLORING_LIMIT) -> Optional[dict[int, int]]:
    """A proper (signed) colouring choosing every colour from its vertex's list, or ``None``.

    Backtracking in smallest-remaining-list order with forward checking.
    ``limit`` caps the number of search nodes.
    """
    sig = _check_sig(g, sig)
    domains = {v: set(c) for v, c in _lists(g, lists).items()}
    coloring: dict[int, int] = {}
    nodes = 0

    def forbidden(v: int, c: int) -> list[tuple[int, int]]:
        # colours that assigning c to v removes from uncoloured neighbours
        out = []
        for w in g.adjacency[v]:
            if w in coloring:
                continue
            s = sig.sign(v, w) if sig is not None else 1
            # conflict when c == s * c_w, i.e. c_w == s * c
            bad = s * c
            if bad in domains[w]:
                out.append((w, bad))
        return out

    def rec() -> bool:
        nonlocal nodes
        if len(coloring) == g.vertex_count:
            return True
        v = min((x for x in g.vertices if x not in coloring), key=lambda x: (len(domains[x]), -g.degree(x), x))
        for c in sorted(domains[v]):
            nodes += 1
            if nodes > limit:
                raise ResourceLimitError(f"list colouring search exceeded {limit} nodes")
            removed = forbidden(v, c)
            if any(len(domains[w]) == 1 for w, _ in removed):
                continue
            coloring[v] = c
            for w, bad in removed:
                domains[w].discard(bad)
            if rec():
                return True
            for w, bad in removed:
                domains[w].add(bad)
            del coloring[v]
        return False

    return dict(sorted(coloring.items())) if rec() else None


def polynomial_value(g: Graph, point: Mapping[int, int], sig: Optional[Signature] = None) -> int:
    """Evaluate the (signed) graph polynomial at an integer point."""
    val = 1
    for u, v in g.sorted_edges:
        s = sig.sign(u, v) if sig is not None else 1
        val *= point[u] - s * point[v]
    return val
