"""Isogeny classes of abelian varieties over finite fields, Weil polynomial
censuses, and additive-combinatorics constructions, backed by a C++ core.

Finite-field elements cross the boundary as integer indices in ``[0, q)``:
for prime q the index is the residue itself, and for prime powers it encodes
the polynomial representation in base p. Sets are plain lists of indices.
"""

from isoclass._core import (
    acceptance,
    angle_independence,
    check_dot_product_bound,
    class_number_forms,
    class_number_order,
    curve_census,
    discriminant_report,
    distinct_pair_products,
    dot_product_sweep,
    evaluate_R,
    expander_image,
    hypersurface_info,
    hypersurface_search,
    is_fundamental_discriminant,
    isogeny_class_members,
    isogeny_class_size,
    isogeny_class_summary,
    positivity_density,
    root_profile,
    ruzsa_sweep_cyclic,
    ruzsa_sweep_multiplicative,
    set_op,
    subfield_concentration,
    sum_product_stats,
    supersingular_j_invariants,
    weil_census,
    weil_scaling,
    weil_status,
)

__all__ = [
    "acceptance",
    "angle_independence",
    "check_dot_product_bound",
    "class_number_forms",
    "class_number_order",
    "curve_census",
    "discriminant_report",
    "distinct_pair_products",
    "dot_product_sweep",
    "evaluate_R",
    "expander_image",
    "hypersurface_info",
    "hypersurface_search",
    "is_fundamental_discriminant",
    "isogeny_class_members",
    "isogeny_class_size",
    "isogeny_class_summary",
    "positivity_density",
    "root_profile",
    "ruzsa_sweep_cyclic",
    "ruzsa_sweep_multiplicative",
    "set_op",
    "subfield_concentration",
    "sum_product_stats",
    "supersingular_j_invariants",
    "weil_census",
    "weil_scaling",
    "weil_status",
]

__version__ = "1.0.0"
