"""Exact arithmetic for derangement, harmonic, hyperharmonic, and
deformed (degenerate) harmonic numbers, plus mechanical verification of
the recurrences, closed forms, and generating-function identities these
families satisfy.

All computation is exact: arbitrary-precision integers, rationals, and
polynomials in the formal deformation symbol L.  A verified polynomial
identity holds for every value of the deformation parameter.
"""

from .exact import (
    LAM,
    LamPoly,
    NonDivisibleError,
    deg_log_rational,
    falling_factorial,
    format_rational,
    format_value,
    int_binomial,
    lpoly_binomial,
    lpoly_exact_div,
    parse_lambda_poly,
    parse_rational,
)
from .identities import (
    CheckReport,
    deg_log_product_check,
    degenerate_harmonic_recurrence_check,
    degenerate_hyperharmonic_closed_form_check,
    degenerate_hyperharmonic_sum_check,
    derangement_recurrence_check,
    harmonic_recurrence_check,
    hyperharmonic_closed_form_check,
    hyperharmonic_sum_check,
    random_log_product_cases,
)
from .sequences import (
    Kind,
    SequenceTable,
    degenerate_harmonics,
    degenerate_hyperharmonic,
    degenerate_hyperharmonic_table,
    derangements,
    harmonics,
    hyperharmonic,
    hyperharmonic_table,
    table,
)
from .series import (
    Series,
    Series2,
    bivariate_deg_harmonic_check,
    bivariate_derangement_check,
    bivariate_harmonic_check,
    deg_log_series,
    exp_neg_t,
    geometric,
    gf_deg_harmonic_check,
    gf_deg_hyperharmonic_check,
    gf_derangement_check,
    gf_harmonic_check,
    gf_hyperharmonic_check,
    log_inv_one_minus_t,
    one_minus_t_pow_lambda,
    pow_inv_one_minus_t,
)

__version__ = "0.1.0"

__all__ = [
    "LAM",
    "LamPoly",
    "NonDivisibleError",
    "CheckReport",
    "Kind",
    "SequenceTable",
    "Series",
    "Series2",
    "deg_log_rational",
    "deg_log_product_check",
    "deg_log_series",
    "degenerate_harmonics",
    "degenerate_harmonic_recurrence_check",
    "degenerate_hyperharmonic",
    "degenerate_hyperharmonic_closed_form_check",
    "degenerate_hyperharmonic_sum_check",
    "degenerate_hyperharmonic_table",
    "derangement_recurrence_check",
    "derangements",
    "exp_neg_t",
    "falling_factorial",
    "format_rational",
    "format_value",
    "geometric",
    "gf_deg_harmonic_check",
    "gf_deg_hyperharmonic_check",
    "gf_derangement_check",
    "gf_harmonic_check",
    "gf_hyperharmonic_check",
    "bivariate_deg_harmonic_check",
    "bivariate_derangement_check",
    "bivariate_harmonic_check",
    "harmonic_recurrence_check",
    "harmonics",
    "hyperharmonic",
    "hyperharmonic_closed_form_check",
    "hyperharmonic_sum_check",
    "hyperharmonic_table",
    "int_binomial",
    "log_inv_one_minus_t",
    "lpoly_binomial",
    "lpoly_exact_div",
    "one_minus_t_pow_lambda",
    "parse_lambda_poly",
    "parse_rational",
    "pow_inv_one_minus_t",
    "random_log_product_cases",
    "table",
]
