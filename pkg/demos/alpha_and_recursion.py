"""
Limiting star densities
=======================

The best induced density of the out-star on k vertices is the maximum of
k x (1-x)^(k-1) / (1 - x^k).  Here we solve it for several k, watch the
class-by-class recursion climb to the same value, and check that the
geometric profile (1 - x_k) x_k^(i-1) attains it.
"""

import math

from inducibility import eval_fm, fm_trace, geometric_weights, solve_alpha

# solve for a range of star orders
print(" k   alpha_k       x_k           residual")
for k in range(3, 11):
    r = solve_alpha(k)
    print(f"{k:2d}   {r.alpha:.10f}  {r.x_star:.10f}  {r.fixed_point_residual:.1e}")

# k = 3 has a closed form
print("\n2*sqrt(3) - 3 =", 2 * math.sqrt(3) - 3)

# F_m(1): the optimum over profiles with at most m classes
trace = fm_trace(3, 12)
alpha3 = solve_alpha(3).alpha
for m, (value, w1) in enumerate(zip(trace.values, trace.maximizers), start=1):
    w = "-" if w1 is None else f"{w1:.6f}"
    print(f"m={m:2d}  F_m={value:.12f}  gap={alpha3 - value:.2e}  best w_1={w}")

# the largest class settles at 1 - x_3
print("1 - x_3 =", 1 - solve_alpha(3).x_star)

# the geometric profile reproduces alpha_3
w = geometric_weights(3, 40)
print("f_40(geometric) =", eval_fm(w, 3), " mass =", w.mass)
