"""Extremal l-intersecting families of monic polynomials over finite fields."""
from .config import GuardError, Guards
from .constructions import Family, exceptional_family, primary_family, scale_family, trivial_family
from .field import Field, FieldElement, enumerate_elements, field_arith, field_of_order, make_field
from .poly import (NEG_INF, Factorization, Poly, count_irreducibles, enumerate_irreducible_monic,
                   enumerate_monic, factor, is_irreducible, lcm_all_monic_degree, poly_divmod,
                   poly_from_index, poly_gcd, poly_index, poly_lcm)
from .search import (CompatibilityGraph, SearchReport, TheoremViolation, build_graph,
                     maximum_cliques, verify_theorem1, verify_theorem4)
from .verifier import (Classification, check_irreducible_witnesses, classify_extremal,
                       family_common_divisor, gcd_degree, is_ell_intersecting,
                       is_k_wise_intersecting)

__version__ = "0.1.0"
