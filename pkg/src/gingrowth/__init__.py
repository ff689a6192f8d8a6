"""Generic initial ideals, Borel-fixed invariants and Hilbert function growth."""

from .constructions import chardin_dcruz_ideal, nonacm_curve_ideal, quadric_union
from .field import DEFAULT_PRIME, PrimeField, RationalField
from .gin import GinResult, gin, gin_hyperplane_restriction, gin_saturation, is_saturated_via_gin
from .groebner import GroebnerBasis, buchberger, initial_ideal, normal_form
from .growth import (
    GrowthReport,
    PreconditionError,
    TheoremViolation,
    cm_check,
    cohen1_bound_check,
    common_factor_P3,
    first_difference_pipeline,
    firstCH_regularity_check,
    second_difference_pipeline,
    strict_decrease_monitor,
    truncate_ideal,
)
from .hilbert import (
    crystallization_check,
    hilbert_table,
    macaulay_growth_bound,
    reduction_number,
    wlp_test,
)
from .ideals import (
    Ideal,
    colon_by_poly,
    colon_by_variable,
    elimination_ideal,
    ideal_intersection,
    restrict_general,
    saturate_by_variable,
    saturation,
)
from .monomial import MonomialIdeal, borel_closure
from .parser import ParseError, emit_ideal, emit_report, load_ideal, parse_ideal
from .points import PointSet, buchberger_moller, point_ideal, random_complete_intersection, random_points
from .ring import DEGREVLEX, LEX, LinearChange, MonomialOrder, Polynomial, Ring, elimination_order
from .series import HilbertSeries, HilbertTable

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_PRIME",
    "DEGREVLEX",
    "GinResult",
    "GroebnerBasis",
    "GrowthReport",
    "HilbertSeries",
    "HilbertTable",
    "Ideal",
    "LEX",
    "LinearChange",
    "MonomialIdeal",
    "MonomialOrder",
    "ParseError",
    "PointSet",
    "Polynomial",
    "PreconditionError",
    "PrimeField",
    "RationalField",
    "Ring",
    "TheoremViolation",
    "borel_closure",
    "buchberger",
    "buchberger_moller",
    "chardin_dcruz_ideal",
    "cm_check",
    "cohen1_bound_check",
    "colon_by_poly",
    "colon_by_variable",
    "common_factor_P3",
    "crystallization_check",
    "elimination_ideal",
    "elimination_order",
    "emit_ideal",
    "emit_report",
    "first_difference_pipeline",
    "firstCH_regularity_check",
    "gin",
    "gin_hyperplane_restriction",
    "gin_saturation",
    "hilbert_table",
    "ideal_intersection",
    "initial_ideal",
    "is_saturated_via_gin",
    "load_ideal",
    "macaulay_growth_bound",
    "nonacm_curve_ideal",
    "normal_form",
    "parse_ideal",
    "point_ideal",
    "quadric_union",
    "random_complete_intersection",
    "random_points",
    "reduction_number",
    "restrict_general",
    "saturate_by_variable",
    "saturation",
    "second_difference_pipeline",
    "strict_decrease_monitor",
    "truncate_ideal",
    "wlp_test",
]
