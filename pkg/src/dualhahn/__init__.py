"""Continuous dual Hahn polynomials and their large-degree asymptotics."""
from .asymptotics import (
    ConvergenceReport,
    ConvergenceRow,
    ScatteringData,
    SpectrumEntry,
    amplitude,
    asymptotic_value,
    bound_state_spectrum,
    comparison_function,
    convergence_report,
    phase_gamma,
    scattering_data,
)
from .cdh import (
    CdhParams,
    evaluate_direct,
    evaluate_recurrence,
    generating_function_check,
    generating_function_rhs,
    norm_squared,
    weight,
)
from .complex_math import gamma, gamma_abs, gamma_arg, log_gamma, pochhammer
from .errors import DomainError, DualHahnError, NoConvergence, PoleError
from .hypergeometric import gauss_sum, hyp2f1, hyp2f1_series, hyp3f2_terminating
from .quadrature import IntegrationResult, integrate_semi_infinite, orthogonality_check

__version__ = "0.1.0"
