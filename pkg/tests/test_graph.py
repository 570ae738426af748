import random
from itertools import combinations

import networkx as nx
import pytest

from alontarsi.errors import GraphFormatError, MalformedInputError
from alontarsi.graph import (EdgeSet, Graph, Orientation, Signature, degeneracy_order, delete_edges, edge,
                             format_graph, is_acyclic_orientation, is_forest, is_matching, iter_orientations,
                             orientation_from_order, parse_graph)

from oracles import every_subgraph_has_low_vertex

K3 = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
K4 = Graph.from_edges(4, combinations(range(4), 2))
P3 = Graph.from_edges(3, [(0, 1), (1, 2)])


def small_graphs(max_n):
    for G in nx.graph_atlas_g()[1:]:
        if G.number_of_nodes() <= max_n:
            yield Graph.from_edges(G.number_of_nodes(), G.edges())


def test_edges_are_canonical():
    g = Graph.from_edges(3, [(2, 0), (1, 2)])
    assert g.edges == {(0, 2), (1, 2)}
    assert edge(5, 3) == (3, 5)


@pytest.mark.parametrize("edges", [[(0, 0)], [(0, 1), (1, 0)], [(0, 3)]])
def test_graph_rejects_bad_edges(edges):
    with pytest.raises(MalformedInputError):
        Graph.from_edges(3, edges)


def test_matching_examples():
    assert is_matching(P3, [(0, 1)])
    assert not is_matching(P3, [(0, 1), (1, 2)])
    assert is_matching(P3, [])
    with pytest.raises(MalformedInputError):
        is_matching(P3, [(0, 2)])


def test_forest_examples():
    assert is_forest(K3, [(0, 1), (1, 2)])
    assert not is_forest(K3, [(0, 1), (1, 2), (0, 2)])
    assert is_forest(K3, [])
    with pytest.raises(MalformedInputError):
        is_forest(P3, [(0, 2)])


def test_edge_set_roles():
    assert EdgeSet(P3, frozenset({(0, 1)}), "matching").degree(1) == 1
    with pytest.raises(MalformedInputError):
        EdgeSet(K3, frozenset(K3.edges), "forest")


def test_acyclic_examples():
    cyc = Orientation(K3, frozenset({(0, 1), (1, 2), (2, 0)}))
    trans = Orientation(K3, frozenset({(0, 1), (0, 2), (1, 2)}))
    assert not is_acyclic_orientation(cyc)
    assert is_acyclic_orientation(trans)
    assert is_acyclic_orientation(Orientation(Graph.from_edges(3, []), frozenset()))


def test_orientation_must_be_total():
    with pytest.raises(MalformedInputError):
        Orientation(K3, frozenset({(0, 1), (1, 2)}))
    with pytest.raises(MalformedInputError):
        Orientation(K3, frozenset({(0, 1), (1, 0), (1, 2), (0, 2)}))


def test_degrees_add_up_and_acyclicity_agrees_with_topological_order():
    for g in small_graphs(5):
        for d in iter_orientations(g):
            for v in g.vertices:
                assert d.out_degree(v) + d.in_degree(v) == g.degree(v)
            # reachability-based cycle test written independently
            has_cycle = any(nx.has_path(nx.DiGraph(list(d.arcs)), h, t) for t, h in d.arcs)
            assert is_acyclic_orientation(d) == (not has_cycle)


@pytest.mark.parametrize("g,k", [(K4, 3), (Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)]), 2),
                                 (Graph.from_edges(5, [(0, 1), (0, 2), (2, 3), (2, 4)]), 1)])
def test_degeneracy_examples(g, k):
    order, value = degeneracy_order(g)
    assert value == k
    assert sorted(order) == list(g.vertices)


def test_degeneracy_is_tight_on_small_graphs():
    for g in small_graphs(6):
        if not g.edges:
            continue
        _, k = degeneracy_order(g)
        assert every_subgraph_has_low_vertex(g, k)
        assert not every_subgraph_has_low_vertex(g, k - 1)


def test_orientation_from_degeneracy_order_is_acyclic_with_bounded_outdegree():
    for g in small_graphs(6):
        order, k = degeneracy_order(g)
        # each vertex points at its neighbours that are peeled later
        d = orientation_from_order(g, order)
        assert is_acyclic_orientation(d)
        assert d.max_out_degree() <= k


def test_delete_edges():
    assert delete_edges(K3, [(0, 1)]).edges == {(0, 2), (1, 2)}
    assert delete_edges(K3, []) == K3
    c4 = delete_edges(K4, [(0, 1), (2, 3)])
    assert nx.is_isomorphic(nx.Graph(list(c4.edges)), nx.cycle_graph(4))
    with pytest.raises(MalformedInputError):
        delete_edges(P3, [(0, 2)])
    rng = random.Random(3)
    for g in small_graphs(5):
        s = [e for e in g.sorted_edges if rng.random() < 0.5]
        assert delete_edges(g, s).with_edges(s) == g


def test_signature_defaults_and_restriction():
    sig = Signature(K3, frozenset({(0, 2)}))
    assert sig.sign(2, 0) == -1 and sig.sign(0, 1) == 1
    assert Signature.all_positive(K3).negative == frozenset()
    assert sig.restrict(P3).negative == frozenset()
    with pytest.raises(MalformedInputError):
        Signature(P3, frozenset({(0, 2)}))


def test_text_round_trip():
    g, sig = parse_graph("4 3\n0 1\n1 2\n2 3\n")
    assert sig is None and g.edge_count == 3
    assert parse_graph(format_graph(g))[0] == g
    gs, sig = parse_graph("3 2\n0 1 -\n1 2 +\n")
    assert sig.negative == {(0, 1)}
    assert format_graph(gs, sig) == "3 2\n0 1 -\n1 2 +\n"


@pytest.mark.parametrize("text,line,col", [
    ("", 1, 1),
    ("3\n", 1, 1),
    ("3 2\n0 1\n", 3, 1),
    ("3 1\n0 x\n", 2, 3),
    ("3 1\n1 1\n", 2, 3),
    ("3 1\n2 1\n", 2, 3),
    ("3 1\n0 7\n", 2, 3),
    ("3 2\n0 1\n0 1\n", 3, 1),
    ("3 1\n0 1 *\n", 2, 5),
    ("3 2\n0 1 +\n1 2\n", 2, 1),
])
def test_parse_errors_carry_position(text, line, col):
    with pytest.raises(GraphFormatError) as info:
        parse_graph(text)
    assert (info.value.line, info.value.column) == (line, col)
