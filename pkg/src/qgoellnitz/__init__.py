"""Exact counting and q-series verification for four-parameter Goellnitz-type
partition theorems in eleven colors."""

from .series import (
    MarkerExponents,
    NO_MARKERS,
    QPolynomial,
    TruncatedSeries,
    Translation,
    GOELLNITZ_15,
    GOELLNITZ_6,
    add,
    apply_dilation,
    euler_quadruple_product,
    invert,
    mul,
    pochhammer,
    qbinomial,
    qbinomial_poly,
    triangular,
)
from .report import Counterexample, VerificationReport
from .colored import (
    Color,
    ColoredPart,
    ColoredPartition,
    FreqVector,
    GapRules,
    compare_symbols,
    constraints_image,
    count_g2,
    count_ga,
    count_p2,
    count_pa,
    freq_vector,
    is_valid_g2,
    is_valid_ga,
    is_valid_p2,
    verify_theorem2,
    verify_theorem_a,
)
from .classical import (
    Theorem1Rules,
    count_g1,
    count_gg,
    count_p1,
    count_pg,
    order_isomorphism_check,
    substitute_15,
    substitute_6,
    verify_theorem1,
    verify_theorem_g,
)
from .identities import (
    bounded_goellnitz,
    bounded_schur,
    full_product_check,
    lhs_goellnitz,
    lhs_key_identity,
    lhs_schur,
    reduction_check,
    rhs_quadruple,
    theorem1_genfunc_check,
    verify_bounded_goellnitz,
    verify_bounded_schur,
    verify_goellnitz_identity,
    verify_key_identity,
    verify_schur_identity,
)

__version__ = "0.1.0"
