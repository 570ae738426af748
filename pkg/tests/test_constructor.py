import json
import random
from dataclasses import replace
from itertools import combinations

import networkx as nx
import pytest

from alontarsi.certifier import eulerian_diff
from alontarsi.constructor import (Certificate, Constraints, Mode, constrained_search, glue, planar_boundary_cert,
                                   solve, triangle_lift, verify_certificate, wagner_leaf_cert)
from alontarsi.decomposer import planar_embedding, wagner_graph
from alontarsi.errors import ContractViolation, K5MinorError, PreconditionError
from alontarsi.graph import Graph, Orientation, Signature, degeneracy_order, delete_edges, edge, is_forest, is_matching

K3 = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
K4 = Graph.from_edges(4, combinations(range(4), 2))
K5 = Graph.from_edges(5, combinations(range(5), 2))
W = wagner_graph()
TWO_K4 = Graph.from_edges(5, [e for e in combinations(range(5), 2) if e != (3, 4)])
MODES = list(Mode)


def embedded(g, face):
    emb = planar_embedding(g)
    return emb.with_outer_face(face)


def test_mode_table():
    assert [m.bound for m in MODES] == [4, 3, 2]
    assert Mode("at4-matching").anchor_pattern == (0, 0, 2)


def test_boundary_k3_examples():
    c = planar_boundary_cert(embedded(K3, (0, 1, 2)), (0, 1, 2), Mode.AT5)
    assert c.arcs == {(1, 0), (2, 0), (2, 1)} and c.diff == 1
    c = planar_boundary_cert(embedded(K3, (0, 1, 2)), (0, 1, 2), Mode.MATCH_AT4)
    assert c.removed == {(0, 1)} and c.arcs == {(2, 0), (2, 1)}
    c = planar_boundary_cert(embedded(K3, (0, 1, 2)), (0, 1, 2), Mode.FOREST_AT3)
    out = c.out_degrees()
    assert (out[0], out[1], out[2]) == (0, 0, 1)
    assert (0, 1) in c.removed and len(c.removed) == 2 and c.acyclic


def test_boundary_k4_at5_example():
    emb = planar_embedding(K4)
    face = next(f for f in emb.faces() if set(f) == {0, 1, 2})
    face = face if face[:2] == (0, 1) else emb.face_with_edge(0, 1)[0]
    c = planar_boundary_cert(emb.with_outer_face(face), face, Mode.AT5)
    assert c.out_degrees()[3] == 3 and c.acyclic and c.diff == 1


def test_boundary_contracts_on_small_plane_graphs():
    for G in nx.graph_atlas_g()[1:]:
        if not 3 <= G.number_of_nodes() <= 6 or not nx.is_biconnected(G):
            continue
        g = Graph.from_edges(G.number_of_nodes(), G.edges())
        emb = planar_embedding(g)
        if emb is None:
            continue
        for face in emb.faces():
            for mode in MODES:
                c = planar_boundary_cert(emb.with_outer_face(face), face, mode)
                out = c.out_degrees()
                rest = set(face[2:])
                if mode is Mode.AT5:
                    assert (out[face[0]], out[face[1]]) == (0, 1)
                    assert all(out[v] <= 2 for v in rest)
                elif mode is Mode.MATCH_AT4:
                    dm = {v: sum(v in e for e in c.removed) for v in g.vertices}
                    assert all(out[v] <= 2 - dm[v] for v in rest)
                else:
                    assert all(out[v] == 1 for v in rest) and c.acyclic
                interior = set(g.vertices) - set(face)
                assert all(out[v] <= mode.bound for v in interior)


def test_boundary_rejects_non_face():
    emb = planar_embedding(TWO_K4)
    with pytest.raises(PreconditionError):
        planar_boundary_cert(emb, (0, 3, 2, 4), Mode.AT5)


def test_triangle_lift_examples():
    c = triangle_lift(embedded(K3, (0, 1, 2)), (0, 1, 2), Mode.MATCH_AT4)
    assert c.removed == {(0, 1)} and c.arcs == {(2, 0), (2, 1)}
    emb = planar_embedding(K4)
    c = triangle_lift(emb, (0, 1, 2), Mode.MATCH_AT4)
    assert {(3, 2), (2, 0), (2, 1)} <= c.arcs
    assert not any(2 in e for e in c.removed)
    assert verify_certificate(K4, c).accepted
    c = triangle_lift(emb, (0, 1, 2), Mode.FOREST_AT3)
    assert (2, 0) in c.arcs and (0, 2) not in c.removed and c.acyclic
    with pytest.raises(PreconditionError):
        triangle_lift(emb, (0, 1, 2), Mode.AT5)


def test_triangle_lift_on_every_facial_triangle():
    for G in nx.graph_atlas_g()[1:]:
        if not 3 <= G.number_of_nodes() <= 6:
            continue
        g = Graph.from_edges(G.number_of_nodes(), G.edges())
        emb = planar_embedding(g)
        if emb is None:
            continue
        for f in emb.faces():
            if len(f) != 3:
                continue
            for mode in (Mode.MATCH_AT4, Mode.FOREST_AT3):
                c = triangle_lift(emb, f, mode)
                assert verify_certificate(g, c).accepted
                assert c.anchor == f and c.anchor_outdeg == mode.anchor_pattern


def transitive_triangle_cert(a, b, c):
    return Certificate(Mode.AT5, frozenset(), frozenset({(b, a), (c, a), (c, b)}), {a: 0, b: 1, c: 2},
                       (a, b), (0, 1), 1, True)


def test_glue_two_transitive_triangles():
    c1 = transitive_triangle_cert(0, 1, 2)
    c2 = transitive_triangle_cert(0, 1, 3)
    out = glue(c1, c2, (0, 1))
    g = Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)])
    assert out.diff == 1 and verify_certificate(g, out).accepted


def test_glue_bare_clique_is_identity():
    c1 = solve(K4, Mode.AT5, anchor=(0, 1, 2))
    bare = Certificate(Mode.AT5, frozenset(), frozenset({(1, 0), (2, 0), (2, 1)}), {0: 0, 1: 1, 2: 2},
                       (0, 1, 2), (0, 1, 2), 1, True)
    out = glue(c1, bare, (0, 1, 2))
    assert out.arcs == c1.arcs and out.removed == c1.removed and out.bounds == c1.bounds


def test_glue_two_k4_product_identity():
    c1 = solve(K4, Mode.AT5)
    piece2 = Graph((0, 1, 2, 4), frozenset(combinations((0, 1, 2, 4), 2)))
    c2 = solve(piece2, Mode.AT5, anchor=(0, 1, 2))
    out = glue(c1, c2, (0, 1, 2))
    assert verify_certificate(TWO_K4, out).accepted
    d = out.orientation(TWO_K4)
    d1 = c1.orientation(K4)
    t_edges = {(0, 1), (0, 2), (1, 2)}
    rest2 = Graph(piece2.vertices, piece2.edges - t_edges)
    d2 = Orientation(rest2, frozenset(a for a in c2.arcs if edge(*a) not in t_edges))
    assert abs(eulerian_diff(d).diff) == abs(eulerian_diff(d1).diff) * abs(eulerian_diff(d2).diff)


def test_glue_preconditions():
    c1 = transitive_triangle_cert(0, 1, 2)
    c2 = transitive_triangle_cert(1, 0, 3)  # anchored the wrong way round
    with pytest.raises(PreconditionError):
        glue(c1, c2, (0, 1))
    leaky = Certificate(Mode.AT5, frozenset(), frozenset({(1, 0), (0, 3), (1, 3)}), {0: 0, 1: 1, 3: 0},
                        (0, 1), (0, 1), 1, True)
    with pytest.raises(PreconditionError):
        glue(c1, leaky, (0, 1))
    with pytest.raises(PreconditionError):
        glue(c1, replace(c2, mode=Mode.MATCH_AT4), (0, 1))


def test_wagner_leaf_examples():
    c = wagner_leaf_cert(W, (0, 4), Mode.MATCH_AT4)
    assert c.removed == {(0, 4), (1, 2), (6, 7)}
    assert c.acyclic and c.max_out_degree() <= 2
    c = wagner_leaf_cert(W, (4, 5), Mode.AT5)
    out = c.out_degrees()
    assert c.acyclic and c.max_out_degree() <= 3 and (out[4], out[5]) == (0, 1)
    for mode in MODES:
        for e in W.sorted_edges:
            c = wagner_leaf_cert(W, e, mode)
            v = verify_certificate(W, c)
            assert v.accepted and "diff:acyclic" in v.checks
            if mode is not Mode.AT5:
                assert is_matching(W, c.removed) and is_forest(W, c.removed)
    with pytest.raises(PreconditionError):
        wagner_leaf_cert(K4, (0, 1))


def test_solve_examples():
    trace = []
    assert verify_certificate(K4, solve(K4, Mode.AT5, trace=trace)).accepted
    assert any(t.startswith("planar") for t in trace)
    trace = []
    solve(W, Mode.AT5, trace=trace)
    assert trace == ["wagner (0, 1, 2, 3, 4, 5, 6, 7)"]
    c = solve(TWO_K4, Mode.FOREST_AT3)
    assert is_forest(TWO_K4, c.removed) and c.acyclic and c.max_out_degree() <= 2
    assert degeneracy_order(delete_edges(TWO_K4, c.removed))[1] <= 2
    with pytest.raises(K5MinorError):
        solve(K5, Mode.AT5)


def test_solve_trivial_and_disconnected():
    c = solve(Graph.from_edges(3, []), Mode.AT5)
    assert c.arcs == frozenset() and c.diff == 1
    g = Graph.from_edges(7, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    for mode in MODES:
        assert verify_certificate(g, solve(g, mode)).accepted


def test_anchored_contracts_over_all_anchors():
    for G in nx.graph_atlas_g()[1:]:
        if not 2 <= G.number_of_nodes() <= 5 or not nx.is_connected(G):
            continue
        g = Graph.from_edges(G.number_of_nodes(), G.edges())
        anchors = list(g.sorted_edges) + [t for t in combinations(g.vertices, 3) if g.is_clique(t)]
        for mode in MODES:
            for a in anchors:
                try:
                    c = solve(g, mode, anchor=a)
                except K5MinorError:
                    break
                out = c.out_degrees()
                assert tuple(out[v] for v in a) == mode.anchor_pattern[:len(a)]
                if len(a) == 3 and mode is Mode.MATCH_AT4:
                    assert not any(a[2] in e for e in c.removed)
                if len(a) == 3 and mode is Mode.FOREST_AT3:
                    assert edge(a[0], a[2]) not in c.removed


def test_solve_rejects_bad_anchor():
    with pytest.raises(PreconditionError):
        solve(Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)]), Mode.AT5, anchor=(0, 2))


def test_signed_solve():
    rng = random.Random(9)
    for mode in MODES:
        sig = Signature.random(TWO_K4, rng)
        c = solve(TWO_K4, mode, sig=sig)
        assert c.negative == sig.negative
        assert verify_certificate(TWO_K4, c, sig=sig).accepted


def test_verify_rejections():
    c = solve(K4, Mode.MATCH_AT4)
    bad = replace(c, removed=frozenset(), arcs=frozenset({(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)}),
                  bounds={v: 2 for v in K4.vertices}, anchor=(), anchor_outdeg=())
    v = verify_certificate(K4, bad)
    assert not v.accepted and "bound" in v.reason
    cyc = Certificate(Mode.AT5, frozenset(), frozenset({(0, 1), (1, 2), (2, 0)}), {0: 4, 1: 4, 2: 4})
    v = verify_certificate(K3, cyc)
    assert not v.accepted and "diff = 0" in v.reason
    missing = replace(cyc, arcs=frozenset({(0, 1), (1, 2)}))
    assert "cover" in verify_certificate(K3, missing).reason
    not_matching = Certificate(Mode.MATCH_AT4, frozenset({(0, 1), (1, 2)}), frozenset({(0, 2)}), {0: 3, 1: 3, 2: 3})
    assert "matching" in verify_certificate(K3, not_matching).reason
    wrong_anchor = replace(solve(K3, Mode.AT5), anchor_outdeg=(0, 0))
    assert not verify_certificate(K3, wrong_anchor).accepted
    lying = replace(solve(K4, Mode.AT5), diff=7)
    assert "claimed diff" in verify_certificate(K4, lying).reason


def test_verify_skips_exact_check_above_limit():
    cyc = Certificate(Mode.AT5, frozenset(), frozenset({(0, 1), (1, 2), (2, 0)}), {0: 4, 1: 4, 2: 4})
    v = verify_certificate(K3, cyc, exact_limit=2)
    assert v.accepted and "diff:skipped" in v.checks


def test_json_round_trip_is_canonical():
    c = solve(TWO_K4, Mode.MATCH_AT4, sig=Signature(TWO_K4, frozenset({(0, 1)})))
    text = c.to_json()
    data = json.loads(text)
    assert list(data) == sorted(data)
    assert data["arcs"] == sorted(data["arcs"])
    assert Certificate.from_json(text) == c
    assert Certificate.from_json(text).to_json() == text


def test_constrained_search_exhaustion():
    with pytest.raises(ContractViolation):
        constrained_search(K4, Constraints(caps={v: 1 for v in K4.vertices}))
    with pytest.raises(ContractViolation):
        constrained_search(K3, Constraints(caps={0: 0, 1: 0, 2: 2}, exact={0: 0, 1: 0}))


def test_single_vertex_anchor_is_a_sink():
    g = Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    for mode in MODES:
        for x in g.vertices:
            c = solve(g, mode, anchor=(x,))
            assert c.anchor == (x,) and c.out_degrees()[x] == 0
            if mode is Mode.MATCH_AT4:
                assert not any(x in e for e in c.removed)
    c = solve(Graph.from_edges(3, [(0, 1)]), Mode.AT5, anchor=(2,))
    assert c.anchor == (2,)
    with pytest.raises(PreconditionError):
        solve(g, Mode.AT5, anchor=(9,))
