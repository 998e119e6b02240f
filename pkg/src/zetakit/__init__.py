"""Numerical toolkit for the Riemann zeta function, its zeros and the primes.

Modules
-------
special_fn        log-gamma, Ei, Bernoulli numbers, Jacobi theta sums
zeta_engine       eta, zeta over the whole plane, xi, Xi, Euler and Hadamard products
critical_line     theta, Z(t), zero scanning, N(T)
prime_arith       sieve, pi, mu, Pi, Chebyshev psi, Mellin-transform checks
explicit_formula  Li, explicit formulas for Pi, psi and pi
regularization    spectral zeta functions and the Casimir effect
cli               the ``zetakit`` command
"""
from .errors import (CacheCorruptionError, ConsistencyError, ConvergenceError,
                     DomainError, EmptyTableError, MissedZerosError, PoleError,
                     SieveBudgetError, ZetaKitError)
from .special_fn import CONSTANTS, bernoulli, exp_integral_ei, gamma, log_gamma
from .zeta_engine import EvalOptions, eta, xi, xi_big, zeta
from .critical_line import ZeroTable, find_zeros, theta_exact, z_function
from .prime_arith import big_pi, chebyshev_psi, mobius, sieve

__all__ = [
    "CONSTANTS",
    "CacheCorruptionError",
    "ConsistencyError",
    "ConvergenceError",
    "DomainError",
    "EmptyTableError",
    "EvalOptions",
    "MissedZerosError",
    "PoleError",
    "SieveBudgetError",
    "ZeroTable",
    "ZetaKitError",
    "bernoulli",
    "big_pi",
    "chebyshev_psi",
    "eta",
    "exp_integral_ei",
    "find_zeros",
    "gamma",
    "log_gamma",
    "mobius",
    "sieve",
    "theta_exact",
    "xi",
    "xi_big",
    "z_function",
    "zeta",
]

__version__ = "0.1.0"
