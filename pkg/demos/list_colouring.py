"""
From a certificate to an actual list colouring
==============================================

A verified AT5 certificate promises that every assignment of 5-element
lists (or k-element lists, k one more than the largest out-degree) admits
a proper colouring.  Draw random lists and find the colourings.
"""
import random

from alontarsi.certifier import find_list_coloring, is_proper_coloring
from alontarsi.constructor import Mode, solve
from alontarsi.corpus import generate

rng = random.Random(0)
g = generate("planar", 12, seed=8)
cert = solve(g, Mode.AT5)
k = cert.max_out_degree() + 1
print(f"certificate gives lists of size {k} for a graph with {g.edge_count} edges")

for trial in range(5):
    lists = {v: sorted(rng.sample(range(2 * k), k)) for v in g.vertices}
    colouring = find_list_coloring(g, lists)
    assert colouring is not None and is_proper_coloring(g, colouring)
    print(f"trial {trial}:", " ".join(f"{v}:{colouring[v]}" for v in g.vertices))
