from .exact_numbers import (
    BigRational,
    bell_polynomial_eval,
    bernoulli,
    bernoulli_numbers,
    binomial,
    set_partition_count,
    stirling2,
    stirling2_explicit,
    stirling2_row,
    stirling_egf_partial_sum,
)
from .gompertz import (
    ExpSum,
    GompertzParams,
    LogPoly,
    bell_form_eval,
    derivative_coeffs,
    derivative_eval,
    egf_eval,
    exp_sum,
    fisher_tippett_cdf,
    gompertz_eval,
    gompertz_inverse_time,
    gumbel_pdf,
    gumbel_pdf_derivative,
    log_poly_eval,
    taylor_coeff_oracle,
)
from .soliton import TanhPoly, grosset_veselov_exact, sech2, sech2_derivative

__all__ = [
    'BigRational',
    'ExpSum',
    'GompertzParams',
    'LogPoly',
    'TanhPoly',
    'bell_form_eval',
    'bell_polynomial_eval',
    'bernoulli',
    'bernoulli_numbers',
    'binomial',
    'derivative_coeffs',
    'derivative_eval',
    'egf_eval',
    'exp_sum',
    'fisher_tippett_cdf',
    'gompertz_eval',
    'gompertz_inverse_time',
    'grosset_veselov_exact',
    'gumbel_pdf',
    'gumbel_pdf_derivative',
    'log_poly_eval',
    'sech2',
    'sech2_derivative',
    'set_partition_count',
    'stirling2',
    'stirling2_explicit',
    'stirling2_row',
    'stirling_egf_partial_sum',
    'taylor_coeff_oracle',
]
