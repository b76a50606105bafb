"""
Brute-force ground truth and the auxiliary 3-graph
==================================================

For tiny n we can scan every digraph.  The maximum number of induced
3-stars matches the iterated blow-up, and the 3-graph of induced 3-stars
of any digraph never contains a tight 5-cycle.
"""

from inducibility import aux_3graph, count_stars, exhaustive_max, is_c5_free, iterated_blowup, random_digraph
from inducibility.extremal import tight_c5
from inducibility.patterns import CompleteBipartite, Star

for n in (3, 4, 5):
    rep = exhaustive_max(n, Star(3), "oriented")
    built = count_stars(iterated_blowup(n, 3), 3).copies
    print(f"n={n}: max {rep.max_copies} over {rep.graphs_examined} digraphs, iterated blow-up gives {built}")

rep = exhaustive_max(4, CompleteBipartite(2, 2), "general")
print("K_(2,2) on 4 vertices:", rep.max_copies, "witness", rep.witness.arcs())

free = all(is_c5_free(aux_3graph(random_digraph(8, 0.6, "oriented", s))) for s in range(200))
print("all 200 random 3-graphs C5-free:", free)
print("tight C5 itself C5-free:", is_c5_free(tight_c5()))
