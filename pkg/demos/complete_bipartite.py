"""
Complete bipartite targets
==========================

For 2 <= s <= t the best K_(s,t) density comes from a single two-class
blow-up with shares t/(s+t) and s/(s+t).  Compare the exact value with
finite balanced blow-ups.
"""

from inducibility import balanced_kst_blowup, count_kst, kst_inducibility, kst_inducibility_exact

for s, t in [(2, 2), (2, 3), (3, 3), (2, 4)]:
    exact = kst_inducibility_exact(s, t)
    print(f"K_({s},{t}): {exact} = {float(exact):.6f}")
    for n in (20, 40, 80):
        c = count_kst(balanced_kst_blowup(n, s, t), s, t)
        print(f"   n={n:3d} density {c.density:.6f}")

# with s = 1 the target is a directed star
print("K_(1,2) =", kst_inducibility(1, 2))
