from .identities import (
    euler_series_coeff,
    gumbel_integral_exact,
    gumbel_rhs,
    log_moment_exact,
    moment_exact,
    moment_via_log_moments,
    verify_binomial_bernoulli,
    verify_euler_series,
    verify_faulhaber,
    verify_grosset_veselov,
    verify_gumbel_bernoulli,
    verify_moment_routes,
    verify_stirling_bernoulli,
    verify_stirling_explicit,
    verify_zeta_even,
)
from .quadrature import (
    QuadratureResult,
    boundary_decay,
    gumbel_integrand,
    integrate_half_line,
    integrate_interval,
    integrate_real_line,
    moment_by_substitution,
    soliton_integrand,
    verify_egf_moment,
    verify_general_derivative_integral,
    verify_grosset_veselov_quadrature,
    verify_gumbel_bernoulli_quadrature,
    verify_log_moment_quadrature,
    verify_moment_quadrature,
)
from .report import RunManifest, VerificationReport

__all__ = [
    'QuadratureResult',
    'RunManifest',
    'VerificationReport',
    'boundary_decay',
    'euler_series_coeff',
    'gumbel_integral_exact',
    'gumbel_integrand',
    'gumbel_rhs',
    'integrate_half_line',
    'integrate_interval',
    'integrate_real_line',
    'log_moment_exact',
    'moment_by_substitution',
    'moment_exact',
    'moment_via_log_moments',
    'soliton_integrand',
    'verify_binomial_bernoulli',
    'verify_egf_moment',
    'verify_euler_series',
    'verify_faulhaber',
    'verify_general_derivative_integral',
    'verify_grosset_veselov',
    'verify_grosset_veselov_quadrature',
    'verify_gumbel_bernoulli',
    'verify_gumbel_bernoulli_quadrature',
    'verify_log_moment_quadrature',
    'verify_moment_quadrature',
    'verify_moment_routes',
    'verify_stirling_bernoulli',
    'verify_stirling_explicit',
    'verify_zeta_even',
]
