"""
A presentation that is not multi-Koszul
=======================================

C = k<x, y, z> / <xz, yyx> has relations in degrees 2 and 3.  Each
one-degree piece is fine on its own, yet the algebra fails to be
multi-Koszul at homological degree 3.
"""

from multikoszul import parse, verdict_via_tor
from multikoszul.koszul import tor_vs_j

C = parse("field Q; gens x y z; rel x*z; rel y*y*x")
print(C)

# The Betti table of the trivial module, computed from a minimal resolution
verdict, res = tor_vs_j(C, n_max=8, i_max=5)
print(res.betti.render())

# J_3 is zero, but Tor_3 has a class in degree 4
print(verdict)
(g,) = res.generators_at(3, 4)
print("witness:", C.poly_str(g.words))

# early stopping finds the same mismatch without finishing the table
print(verdict_via_tor(C, 8, 5, early_stop=True))
