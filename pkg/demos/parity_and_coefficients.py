"""
Coefficients of the graph polynomial from Eulerian parity
=========================================================

The coefficient of a monomial in prod (x_u - x_v) can be read off any
orientation whose out-degrees match the exponents: count the Eulerian
spanning subdigraphs with an even and with an odd number of arcs and
subtract.
"""
from alontarsi.certifier import alon_tarsi_witness, coeff_of_monomial, eulerian_diff
from alontarsi.graph import Graph, Orientation

# A directed 4-cycle: the empty subgraph and the whole cycle are both even.
c4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
d = Orientation(c4, frozenset({(0, 1), (1, 2), (2, 3), (3, 0)}))
p = eulerian_diff(d)
print("C4 directed cycle: even", p.even_count, "odd", p.odd_count, "diff", p.diff)
print("coefficient of x0 x1 x2 x3:", coeff_of_monomial(c4, d.out_degree_vector()))

# The same game on a triangle cancels out, so that monomial vanishes.
k3 = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
cyc = Orientation(k3, frozenset({(0, 1), (1, 2), (2, 0)}))
print("K3 directed cycle diff:", eulerian_diff(cyc).diff, "coefficient:", coeff_of_monomial(k3, (1, 1, 1)))

# The Alon-Tarsi number is the smallest k reached by a surviving monomial.
for name, g in [("C4", c4), ("C5", Graph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)])), ("K3", k3)]:
    k, vector = alon_tarsi_witness(g)
    print(f"AT({name}) = {k}, witness exponents {[vector[v] for v in g.vertices]}")
