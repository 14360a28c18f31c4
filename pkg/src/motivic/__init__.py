"""Zeta functions of varieties over finite fields, computed exactly.

The package turns point counts into big Witt vectors, does scissor
arithmetic in the Grothendieck ring of varieties, reconstructs rational
forms of zeta functions, and evaluates a Z/2-valued invariant of
automorphisms built from joint eigenvalue data and 2-adic Hilbert
symbols.
"""

from .errors import MotivicError
from .h2 import (
    Conjugation,
    Frobenius,
    Scenario,
    catalog_zeta_rational,
    cohomology_table,
    h2_eval,
    lefschetz_check,
    scenario_pairs,
)
from .hilbert import (
    CommutingPair,
    SteinbergProduct,
    hilbert2,
    hilbert_odd,
    moore_h2,
    sigma2,
)
from .k0 import (
    K0Class,
    k0_add,
    k0_class,
    k0_mul,
    k0_neg,
    k0_sub,
    lefschetz,
    measure_counts,
    measure_zeta,
    verify_scissor,
)
from .rat import RationalFn, min_recurrence, to_rational, weil_validate
from .varieties import (
    VarietyExpr,
    closed_point_profile,
    parse_variety,
    point_count,
    variety_to_text,
)
from .witt import (
    WittVector,
    euler_product,
    from_pointcounts,
    ghost,
    ghost_inverse,
    teichmuller,
    witt_add,
    witt_mul,
    witt_neg,
    witt_sub,
    witt_vector,
)

__version__ = "0.1.0"

__all__ = [
    "CommutingPair",
    "Conjugation",
    "Frobenius",
    "K0Class",
    "MotivicError",
    "RationalFn",
    "Scenario",
    "SteinbergProduct",
    "VarietyExpr",
    "WittVector",
    "catalog_zeta_rational",
    "closed_point_profile",
    "cohomology_table",
    "euler_product",
    "from_pointcounts",
    "ghost",
    "ghost_inverse",
    "h2_eval",
    "hilbert2",
    "hilbert_odd",
    "k0_add",
    "k0_class",
    "k0_mul",
    "k0_neg",
    "k0_sub",
    "lefschetz",
    "lefschetz_check",
    "measure_counts",
    "measure_zeta",
    "min_recurrence",
    "moore_h2",
    "parse_variety",
    "point_count",
    "scenario_pairs",
    "sigma2",
    "teichmuller",
    "to_rational",
    "variety_to_text",
    "verify_scissor",
    "weil_validate",
    "witt_add",
    "witt_mul",
    "witt_neg",
    "witt_sub",
    "witt_vector",
    "__version__",
]
