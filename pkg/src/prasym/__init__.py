"""Orthogonal polynomials from four indeterminate moment problems.

Recurrence evaluation with overflow-free scaling, Plancherel-Rotach type
approximants, zeros with rigorous enclosures, and indeterminacy diagnostics.
"""
from .families import (
    FamilyKind, FamilySpec, FamilyError, family, constants, nu, birth_rate, death_rate,
    monic_coeffs, standard_coeffs, K, log_K, evaluate, evaluate_monic, evaluate_standard,
    evaluate_orthonormal, evaluate_exact, build_jacobi,
)
from .scaled import ScaledReal
from .specfun import DomainError
from .phase import U, U_star, Region, classify_region, theta_of_t, t_of_theta
from .asympt import (
    Approximant, approximate, compare, approx_outer, approx_airy, approx_bessel,
    approx_oscillatory, approx_edge, edge_true, extreme_zero_prediction,
)
from .zeros import ZeroSet, compute_zeros, chain_bound, closed_form_bound, hethcote_check
from .moment import ks_distance, indeterminacy_check, conjecture_check, conjecture_exponent, weight_tail

__version__ = "0.1.0"
