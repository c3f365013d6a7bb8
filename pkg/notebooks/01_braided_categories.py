"""Braided categorical groups: presentations, coherence and the twist anomaly.

Run with `python3 notebooks/01_braided_categories.py`.
"""

from gctqft.abelian import FiniteAbelianGroup
from gctqft.barcohomology import classify_braided, classify_symmetric
from gctqft.groupcat import check_all, enumerate_presentations, from_exponents, normalizability_report

# A presentation fixes sigma on generators (as exponents of a root of unity)
# and sigma on ordered pairs of distinct generators.
p = from_exponents((2,), [1])
print("presentation:", p)
for r in check_all(p):
    print("  ", r)

# The Z/2 twists and what they imply for a normalized 4-dimensional theory.
for k in range(4):
    rep = normalizability_report(from_exponents((2,), [k]))
    print(f"sigma = i^{k}: tau = {rep.tau}, tau_bar = {rep.tau_bar} -> {rep.verdict()}")

# How many presentations exist, and how many braided classes up to equivalence.
for orders, level in [((2,), 4), ((3,), 3), ((2, 2), 4)]:
    G = FiniteAbelianGroup(orders)
    print(
        f"Z/{orders}: braided classes at level {level} = {len(classify_braided(G, level))},",
        f"symmetric = {len(classify_symmetric(G, level))}",
    )
print("presentations of Z/4 at level 8:", sum(1 for _ in enumerate_presentations((4,), 8)))
