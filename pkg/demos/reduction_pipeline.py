"""
Reducing a digraph to a weighted profile
========================================

Twin classes that are not joined get fused (whichever endpoint keeps more
stars), two-way class bundles lose a direction, and finally every bundle
points from the smaller class to the larger one.  None of these steps can
lose an induced star, and the end result is a blow-up of a transitive
tournament described by its class sizes.
"""

from inducibility import count_stars, random_digraph, reduce, twin_partition

k = 3
d = random_digraph(9, 0.35, "general", seed=12)
print("input:", d.n, "vertices,", d.num_arcs, "arcs,", twin_partition(d).m, "twin classes")
print("stars before:", count_stars(d, k).copies)

red = reduce(d, k)
for step in red.steps:
    print("  ", type(step).__name__, step.pair, step.original_count, "->", step.chosen_count)

print("stars after:", count_stars(red.digraph, k).copies)
print("class sizes:", red.partition.sizes)
print("profile:", [str(w) for w in red.profile.weights])
print("class arcs (small -> large):", red.class_arcs())
