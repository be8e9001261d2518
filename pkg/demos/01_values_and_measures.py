"""Tour of the value types and the strict JS distance.

Run: python demos/01_values_and_measures.py
"""

import numpy as np

from ifsim import (
    IFS,
    IFV,
    atanassov_strict_subset,
    builtin_dataset,
    complement,
    dist_wu,
    dist_xiao,
    entropy_ifv,
    indeterminacy,
    js_norm,
    l_divergence,
    sim_xiao,
    uniform_weights,
    z_score,
    zeta,
)

print("=" * 72)
print("Intuitionistic fuzzy values: <membership, non-membership>")
print("=" * 72)
a = IFV(0.33, 0.36)
b = IFV(1 / 3, 1 / 3)
c = IFV(0.334, 0.333333)
print(f"a = {a}   indeterminacy = {indeterminacy(a):.4f}   complement = {complement(a)}")
print(f"the chain a < b < c holds: {atanassov_strict_subset(a, b) and atanassov_strict_subset(b, c)}")

print()
print("=" * 72)
print("Building blocks: L, zeta, and the per-pair score z")
print("=" * 72)
print(f"L(1, 0)      = {l_divergence(1.0, 0.0)}              (one bit)")
print(f"L(0.5, 0.25) = {l_divergence(0.5, 0.25):.12f}")
print(f"zeta(0.5) = {zeta(0.5)}   zeta(0) = {zeta(0.0)}   zeta(0.25) = {zeta(0.25):.12f}")
print(f"z(<1,0>, <0,1>) = {z_score(IFV(1, 0), IFV(0, 1))}       (the global maximum, 2)")

print()
print("=" * 72)
print("The strict distance js_norm separates the chain; the rival does not")
print("=" * 72)
print(f"js_norm(a, b) = {js_norm(a, b):.10f}")
print(f"js_norm(a, c) = {js_norm(a, c):.10f}   (farther along the chain => larger)")
one = lambda v: IFS(("x",), (v,))
print(f"sim_xiao(a, b) = {sim_xiao(one(a), one(b)):.7f}")
print(f"sim_xiao(a, c) = {sim_xiao(one(a), one(c)):.7f}   (MORE similar to the farther c: the defect)")

print()
print("=" * 72)
print("Weighted distance on sets: the five published comparison cases")
print("=" * 72)
print(f"{'case':>4}  {'d_xiao':>10}  {'d_wu':>10}")
for i in range(1, 6):
    sets, w = builtin_dataset(f"tableI_case{i}")
    print(f"{i:>4}  {dist_xiao(sets['A'], sets['B']):>10.5f}  {dist_wu(sets['A'], sets['B'], w):>10.5f}")
print("(cases 3 and 4 of the published table disagree with these recomputed")
print(" values; see the tab2-distances scenario notes)")

print()
print("=" * 72)
print("Induced entropy: 1 at the balanced diagonal, 0 at the crisp corners")
print("=" * 72)
for v in (IFV(1, 0), IFV(0.5, 0.25), IFV(0.3, 0.2), IFV(0.4, 0.4), IFV(0, 0)):
    print(f"E({v}) = {entropy_ifv(v):.10f}")

print()
print("Closed form check: distance from <1,0> to <lam,1-lam> is sqrt(1-lam)")
w1 = uniform_weights(1)
for lam in (0.0, 0.25, 0.5, 0.75, 1.0):
    d = dist_wu(one(IFV(1, 0)), one(IFV(lam, 1 - lam)), w1)
    print(f"  lam = {lam:.2f}: {d:.12f}  vs  sqrt(1-lam) = {np.sqrt(1 - lam):.12f}")
