"""
Signed graphs
=============

With edge signs the polynomial becomes prod (x_u - s_uv x_v) and the
parity of an Eulerian subgraph counts only its positive arcs.  The same
solver produces certificates that the signed verifier accepts.
"""
import random

from alontarsi.certifier import coeff_of_monomial, eulerian_diff, signed_color_set
from alontarsi.constructor import Mode, solve, verify_certificate
from alontarsi.corpus import generate
from alontarsi.graph import Graph, Orientation, Signature

# One negative edge turns the cancelling triangle into a surviving monomial.
k3 = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
cyc = Orientation(k3, frozenset({(0, 1), (1, 2), (2, 0)}))
sig = Signature(k3, frozenset({(0, 1)}))
print("signed triangle diff:", eulerian_diff(cyc, sig).diff, "coefficient:", coeff_of_monomial(k3, (1, 1, 1), sig))
print("signed palette for k = 4:", signed_color_set(4))

g = generate("cliquesum", 11, seed=12)
sig = Signature.random(g, random.Random(12))
for mode in Mode:
    cert = solve(g, mode, sig=sig)
    print(mode.value, verify_certificate(g, cert, sig=sig).reason, f"(negative edges {len(cert.negative)})")
