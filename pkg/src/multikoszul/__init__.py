"""Exact computations for multi-homogeneous algebras A = T(V)/<R>."""

from .linalg import Field, QQ, Subspace, ExactMatrix
from .presentation import Presentation, parse, opposite, free_product, ParseError
from .algebra import GradedAlgebra, algebra_dims
from .resolution import minimal_resolution, global_dimension
from .koszul import (n_map, compute_J, build_complex, check_exactness, verdict_via_tor,
                     verdict_via_complex, theorem_decomposition_check,
                     right_pd_over_subalgebra, Verdict)
from .lattice import extra_conditions, theorem5_verdict, monomial_verdict
from .cohomology import bar_ext_dims, cup_product, k2_generation_check, hochschild
from .corpus import load

__all__ = [
    "Field", "QQ", "Subspace", "ExactMatrix", "Presentation", "parse", "opposite",
    "free_product", "ParseError", "GradedAlgebra", "algebra_dims", "minimal_resolution",
    "global_dimension", "n_map", "compute_J", "build_complex", "check_exactness",
    "verdict_via_tor", "verdict_via_complex", "theorem_decomposition_check",
    "right_pd_over_subalgebra", "Verdict", "extra_conditions", "theorem5_verdict",
    "monomial_verdict", "bar_ext_dims", "cup_product", "k2_generation_check", "hochschild",
    "load",
]
__version__ = "0.1.0"
