"""
Four ways to decide the same property
=====================================

For a two-degree presentation there are several independent routes to a
verdict.  They should always agree; here they are side by side on a
free product, which is multi-Koszul, and on a near miss.
"""

import time


from multikoszul import (load, monomial_verdict, theorem5_verdict, theorem_decomposition_check,
                         verdict_via_complex, verdict_via_tor)

routes = {
    "Tor vs J": lambda p: verdict_via_tor(p, 8, 5),
    "complex": lambda p: verdict_via_complex(p, 8, 5),
    "decomposition": lambda p: theorem_decomposition_check(p, 8, 5),
    "lattice": lambda p: theorem5_verdict(p, 8, 5),
    "monomial": monomial_verdict,
}

for name in ["x2_y3", "difkos"]:
    p = load(name)
    print(name, "|", p.one_line())
    for label, fn in routes.items():
        t = time.perf_counter()
        v = fn(p)
        print(f"   {label:<14}{str(v):<60}{time.perf_counter() - t:6.2f}s")
