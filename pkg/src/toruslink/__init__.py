"""Exact arithmetic for torus knot and link invariants.

The package computes Alexander polynomials of torus links, their cyclotomic
factorizations and specializations, root moment statistics, equidistribution
scans over parameter families, homology orders of cyclic branched covers,
Mahler measures, and ell-adic growth invariants.  Everything that can be an
integer or a rational stays one; floats appear only where a value is honestly
transcendental.
"""

__version__ = "0.1.0"

from .alexander import (
    AdmissibleVector,
    CycFactorization,
    TorusParams,
    admissible_vector,
    alexander_poly,
    coloring_zero_order,
    cyclotomic_multiplicities,
    determinant,
    ell_colorable,
    hosokawa,
    specialize_z,
    torus_params,
)
from .covers import (
    TowerReport,
    acuna_short_check,
    homology_order_cyclic,
    mahler_measure_quadrature,
    mahler_measure_roots,
    tower_orders_knot,
    tower_orders_link,
)
from .distribution import (
    ALL_LINKS,
    KNOTS_COPRIME,
    Arc,
    ScanReport,
    arc,
    arc_count_single,
    count_coprime_pairs,
    count_roots_total,
    frequency_Fr,
    scan,
    weyl_sum,
)
from .errors import InvariantError
from .iwasawa import (
    IwasawaInvariants,
    complete_at_ell,
    knot_invariants,
    lambda_decomposition_check,
    link_invariants,
    weierstrass_mu_lambda,
)
from .moments import (
    MomentRecord,
    generating_fn,
    mean_variance,
    moment,
    moment_bruteforce,
    moment_record,
    parseval_check,
    residue_at,
)

__all__ = [
    "AdmissibleVector",
    "ALL_LINKS",
    "Arc",
    "CycFactorization",
    "InvariantError",
    "IwasawaInvariants",
    "KNOTS_COPRIME",
    "MomentRecord",
    "ScanReport",
    "TorusParams",
    "TowerReport",
    "acuna_short_check",
    "admissible_vector",
    "alexander_poly",
    "arc",
    "arc_count_single",
    "coloring_zero_order",
    "complete_at_ell",
    "count_coprime_pairs",
    "count_roots_total",
    "cyclotomic_multiplicities",
    "determinant",
    "ell_colorable",
    "frequency_Fr",
    "generating_fn",
    "homology_order_cyclic",
    "hosokawa",
    "knot_invariants",
    "lambda_decomposition_check",
    "link_invariants",
    "mahler_measure_quadrature",
    "mahler_measure_roots",
    "mean_variance",
    "moment",
    "moment_bruteforce",
    "moment_record",
    "parseval_check",
    "residue_at",
    "scan",
    "specialize_z",
    "torus_params",
    "tower_orders_knot",
    "tower_orders_link",
    "weierstrass_mu_lambda",
    "weyl_sum",
]
