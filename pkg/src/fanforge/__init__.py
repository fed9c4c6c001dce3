"""Exact enumeration and projectivity analysis of complete simplicial fans.

Given an integer matrix whose columns generate the rays, the package
enumerates every complete simplicial fan using all of the columns, and
independently enumerates the projective ones through the Groebner fan of
the associated toric ideal.  Gale duality connects the two: each fan has
a nef chamber in the secondary fan, full-dimensional exactly for the
projective fans.  All arithmetic is exact.
"""

from .binomials import (
    BinomialIdeal,
    MonomialIdeal,
    NonGenericWeight,
    NotATermOrder,
    TermOrder,
    binomial_string,
    buchberger,
    ideals_equal,
    initial_ideal,
    monomial_string,
    normal_form,
    reduces_to_zero,
)
from .cones import (
    Cone,
    cone_dim,
    dual_cone,
    interior_point,
    interiors_disjoint,
    intersect,
)
from .fans import (
    AxiomViolation,
    Fan,
    FanMatrix,
    enumerate_pseudofans,
    enumerate_sf,
    minimal_cones,
    oriented_facets,
    pseudofan_conjecture_report,
    validate_fan_matrix,
)
from .gale import (
    WeightMatrix,
    anticanonical_class,
    bunch_of_fan,
    cf_cover,
    effective_cone,
    family_matrices,
    gale_dual,
    is_projective,
    movable_cone,
    nef_cone,
    weight_matrix_from_rows,
)
from .groebner_fan import (
    GroebnerRecord,
    NotAFan,
    dehomogenize_and_filter,
    enumerate_initial_ideals,
    enumerate_psf,
    fan_from_initial_ideal,
    homogenize,
    initial_ideal_for_weight,
    psf_analysis,
    stanley_reisner,
)
from .intmat import (
    hermite_normal_form,
    integer_kernel_basis,
    lattices_equal,
    smith_invariants,
    solve_rational,
)
from .plot import UnsupportedRank, secondary_fan_svg
from .toric import (
    groebner_region,
    groebner_region_three_ways,
    min_nonminima_check,
    toric_ideal,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
