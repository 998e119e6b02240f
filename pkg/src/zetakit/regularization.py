"""Spectral zeta regularization and the parallel-plate Casimir effect.

Units: hbar = c = 1 everywhere; ``restore_units`` multiplies by hbar c for
display only. Spectral quantities are per unit normalization volume A T_E.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Sequence

from scipy import constants as sc

from .errors import DomainError, PoleError
from .special_fn import log_gamma
from .zeta_engine import zeta

__all__ = [
    "CasimirConfig",
    "casimir_energy",
    "casimir_force_per_area",
    "casimir_force_per_area_fd",
    "operator_zeta",
    "operator_zeta_prime_at_zero",
    "restore_units",
    "spectral_determinant",
    "spectral_zeta_prime_at_zero",
]

# 4 pi / (2 pi)^3
_PREFACTOR = 4.0 * math.pi / (2.0 * math.pi) ** 3
_GAMMA_3_2 = math.sqrt(math.pi) / 2.0
HBAR_C = sc.hbar * sc.c  # J m


@dataclass(frozen=True)
class CasimirConfig:
    a: float
    A: float = 1.0

    def __post_init__(self):
        if not (self.a > 0 and math.isfinite(self.a)):
            raise DomainError("plate separation a must be positive")
        if not (self.A > 0 and math.isfinite(self.A)):
            raise DomainError("plate area A must be positive")


def _is_nonpos_int(z: complex) -> bool:
    return z.imag == 0 and z.real <= 0 and z.real == math.floor(z.real)


def operator_zeta(s, cfg: CasimirConfig) -> complex:
    """(4pi/(2pi)^3) (pi/a)^{3-2s} zeta(2s-3) Gamma(3/2) Gamma(s-3/2) / Gamma(s)."""
    s = complex(s)
    if s == 2:
        raise PoleError("zeta(2s-3) has its pole at s=2")
    if _is_nonpos_int(s - 1.5):
        raise PoleError(f"Gamma(s-3/2) has a pole at s={s.real:g}")
    if _is_nonpos_int(s):
        # 1/Gamma(s) vanishes; the other factors are finite here
        return 0j
    log_ratio = log_gamma(s - 1.5) - log_gamma(s)
    scale = cmath.exp((3.0 - 2.0 * s) * math.log(math.pi / cfg.a))
    val = _PREFACTOR * scale * zeta(2.0 * s - 3.0) * _GAMMA_3_2 * cmath.exp(log_ratio)
    if s.imag == 0:
        return complex(val.real, 0.0)
    return val


def operator_zeta_prime_at_zero(cfg: CasimirConfig) -> float:
    """d/ds operator_zeta at s=0.

    Near 0, 1/Gamma(s) = s + O(s^2) and every other factor is regular, so the
    derivative is the remaining product at s=0:
    (4pi/(2pi)^3) (pi/a)^3 zeta(-3) Gamma(3/2) Gamma(-3/2) = pi^2 / (360 a^3).
    """
    gamma_m32 = 4.0 * math.sqrt(math.pi) / 3.0  # Gamma(-3/2)
    z3 = zeta(-3.0).real
    return _PREFACTOR * (math.pi / cfg.a) ** 3 * z3 * _GAMMA_3_2 * gamma_m32


def casimir_energy(cfg: CasimirConfig) -> float:
    """Vacuum energy shift -(1/2) zeta'(0) A = -pi^2 A / (720 a^3)."""
    return -0.5 * operator_zeta_prime_at_zero(cfg) * cfg.A


def casimir_force_per_area(a: float) -> float:
    """-d(energy/A)/da = -pi^2 / (240 a^4)."""
    if not a > 0:
        raise DomainError("plate separation a must be positive")
    return -math.pi ** 2 / (240.0 * a ** 4)


def casimir_force_per_area_fd(a: float, h: float = 1e-4) -> float:
    """Central finite difference of the energy per area."""
    if not a > h > 0:
        raise DomainError("need a > h > 0")
    e_plus = casimir_energy(CasimirConfig(a + h))
    e_minus = casimir_energy(CasimirConfig(a - h))
    return -(e_plus - e_minus) / (2.0 * h)


def restore_units(value: float) -> float:
    """Multiply a natural-units result by hbar c (lengths in metres gives SI)."""
    return value * HBAR_C


def spectral_zeta_prime_at_zero(eigenvalues: Sequence[float]) -> float:
    """zeta_A'(0) = -sum log(lambda) for a finite positive spectrum."""
    lam = [float(v) for v in eigenvalues]
    if not lam or min(lam) <= 0:
        raise DomainError("need a non-empty positive spectrum")
    return -math.fsum(math.log(v) for v in lam)


def spectral_determinant(eigenvalues: Sequence[float]) -> float:
    """det A = exp(-zeta_A'(0))."""
    return math.exp(-spectral_zeta_prime_at_zero(eigenvalues))
