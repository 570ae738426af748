"""
Certificates for a random clique-sum
====================================

Generate a K5-minor-free graph by gluing small planar pieces and the
Wagner graph, look at its clique-sum tree, then certify it in all three
modes and check each certificate independently.
"""
import json

from alontarsi.constructor import Mode, solve, verify_certificate
from alontarsi.corpus import generate
from alontarsi.decomposer import decompose, leaves, sumtree_to_dict
from alontarsi.graph import degeneracy_order, delete_edges

g = generate("cliquesum", 12, seed=3)
print(f"graph with {g.vertex_count} vertices and {g.edge_count} edges")

# The decomposition splits on small clique separators down to planar or Wagner leaves.
tree = decompose(g)
print("leaves:", [(leaf.kind, leaf.piece.vertices) for leaf in leaves(tree)])
print(json.dumps(sumtree_to_dict(tree))[:160], "...")

for mode in Mode:
    trace = []
    cert = solve(g, mode, trace=trace)
    verdict = verify_certificate(g, cert)
    print(f"\n{mode.value}: max out-degree {cert.max_out_degree()}, removed {sorted(cert.removed)}")
    print("  steps:", "; ".join(trace))
    print("  verifier:", verdict.reason, list(verdict.checks))
    if mode is Mode.FOREST_AT3:
        # what is left after deleting the forest peels with degree at most 2
        print("  degeneracy after removing F:", degeneracy_order(delete_edges(g, cert.removed))[1])
