"""
Ext from the bar complex, and Hochschild homology
=================================================

The Ext algebra of k can be computed without any resolution, straight
from the bar complex.  Its dimensions must match the Betti numbers.
"""

from multikoszul import GradedAlgebra, load, minimal_resolution
from multikoszul.cohomology import bar_ext_dims, hochschild, k2_generation_check

A = load("x2_y3")

ext = {k: v for k, v in bar_ext_dims(A, 6, 4).items() if v}
betti = minimal_resolution(GradedAlgebra(A, 6), None, 6, 4).betti.nonzero()
print("Ext  ", ext)
print("Tor  ", betti)
print("same:", ext == betti)

# a multi-Koszul algebra has Ext generated in degrees 1 and 2
print(k2_generation_check(A, 8, 5))

# Hochschild homology of the truncated polynomial ring k[u]/(u^4)
h = hochschild(load("loco_C"), 7, 3)
for i in range(4):
    print(f"HH_{i}", {n: d for (j, n), d in h.homology.items() if j == i and d})
