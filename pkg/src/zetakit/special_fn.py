"""Complex special functions shared by the rest of the package.

Log-gamma, the exponential integral, Bernoulli numbers, Jacobi theta-type
sums and the two classical product formulas (Weierstrass Gamma, Euler sine)
that serve as independent cross-checks.

All logarithms are principal branch with imaginary part in (-pi, pi].
``log_gamma`` is the analytic log-gamma (cut along the negative real axis),
which is what the Riemann-Siegel theta function needs.
"""
from __future__ import annotations

import math
import cmath
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import ConvergenceError, DomainError, PoleError

__all__ = [
    "CONSTANTS",
    "Constants",
    "bernoulli",
    "exp_integral_ei",
    "gamma",
    "gamma_weierstrass",
    "jacobi_psi",
    "jacobi_psi_prime",
    "jacobi_psi_weighted_deriv",
    "jacobi_theta",
    "log_gamma",
    "sin_pi",
    "sin_pi_product",
]


@dataclass(frozen=True)
class Constants:
    euler_gamma: float = 0.57721566490153286061
    lemniscate: float = 2.62205755429211981046
    pi: float = math.pi


CONSTANTS = Constants()

# Lanczos approximation, g = 607/128, 15 terms (Godfrey). Relative error
# ~1e-15 on Re z >= 1/2.
_LANCZOS_G = 607.0 / 128.0
_LANCZOS_C = np.array([
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
])
_HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)


def _is_gamma_pole(z: complex) -> bool:
    return z.imag == 0.0 and z.real <= 0.0 and z.real == math.floor(z.real)


def _lanczos_log_gamma(z):
    """log Gamma(z) for Re z >= 1/2 (scalar or array)."""
    zm1 = z - 1.0
    acc = _LANCZOS_C[0]
    for k in range(1, len(_LANCZOS_C)):
        acc = acc + _LANCZOS_C[k] / (zm1 + k)
    t = zm1 + _LANCZOS_G + 0.5
    return _HALF_LOG_2PI + (zm1 + 0.5) * np.log(t) - t + np.log(acc)


def log_gamma(z):
    """Principal-branch log Gamma(z) for complex ``z``.

    Accepts a scalar or a numpy array. For Re z < 1/2 the argument is shifted
    upward with ``log Gamma(z) = log Gamma(z + n) - sum log(z + k)``; summing
    principal logs of the shift factors reproduces the branch cut on the
    negative real axis exactly, which the plain reflection formula does not.

    Raises PoleError at non-positive integers.
    """
    if np.ndim(z) == 0:
        zc = complex(z)
        if _is_gamma_pole(zc):
            raise PoleError(f"Gamma has a pole at z={zc.real:g}")
        if not (math.isfinite(zc.real) and math.isfinite(zc.imag)):
            raise DomainError("log_gamma needs a finite argument")
        shift = 0
        corr = 0j
        while zc.real + shift < 0.5:
            corr += cmath.log(zc + shift)
            shift += 1
        return complex(_lanczos_log_gamma(zc + shift)) - corr

    za = np.asarray(z, dtype=complex)
    poles = (za.imag == 0) & (za.real <= 0) & (za.real == np.floor(za.real))
    if np.any(poles):
        raise PoleError("Gamma has a pole at a non-positive integer in the input")
    shift = np.maximum(np.ceil(0.5 - za.real), 0).astype(int)
    corr = np.zeros_like(za)
    for k in range(int(shift.max()) if shift.size else 0):
        m = shift > k
        corr[m] += np.log(za[m] + k)
    return _lanczos_log_gamma(za + shift) - corr


def gamma(z) -> complex:
    """Gamma(z) = exp(log_gamma(z)); real input gives a real-valued complex."""
    zc = complex(z)
    val = cmath.exp(log_gamma(zc))
    if zc.imag == 0.0:
        # sign of Gamma on the negative axis lives in the branch's imaginary part
        return complex(val.real, 0.0)
    return val


def sin_pi(z) -> complex:
    """sin(pi z) with exact zeros at the integers."""
    zc = complex(z)
    a = zc.real - 2.0 * round(zc.real / 2.0)
    b = math.pi * zc.imag
    if a == round(a):
        s, c = 0.0, (1.0 if a == 0.0 else -1.0)
    elif 2.0 * a == round(2.0 * a):
        s, c = (1.0 if a == 0.5 else -1.0), 0.0
    else:
        s, c = math.sin(math.pi * a), math.cos(math.pi * a)
    return complex(s * math.cosh(b), c * math.sinh(b))


def gamma_weierstrass(z, n_terms: int) -> complex:
    """Truncated Weierstrass product for Gamma(z); an oracle, not a fast path.

    Gamma(z) = exp(-gamma z) / z * prod_k exp(z/k) / (1 + z/k)
    """
    zc = complex(z)
    if _is_gamma_pole(zc):
        raise PoleError(f"Gamma has a pole at z={zc.real:g}")
    if n_terms < 1:
        raise DomainError("n_terms must be >= 1")
    k = np.arange(1, n_terms + 1, dtype=float)
    # sum of logs avoids under/overflow of the running product
    logs = zc / k - np.log1p(zc / k)
    total = math.fsum(logs.real) + 1j * math.fsum(logs.imag)
    return cmath.exp(-CONSTANTS.euler_gamma * zc + total) / zc


def sin_pi_product(x: float, n_terms: int) -> float:
    """pi x prod_{k<=n} (1 - x^2/k^2)."""
    if n_terms < 1:
        raise DomainError("n_terms must be >= 1")
    k = np.arange(1, n_terms + 1, dtype=float)
    factors = 1.0 - (x / k) ** 2
    if np.any(factors == 0.0):
        return 0.0
    sign = -1.0 if np.count_nonzero(factors < 0) % 2 else 1.0
    return sign * math.pi * x * math.exp(math.fsum(np.log(np.abs(factors))))


# ---------------------------------------------------------------------------
# Exponential integral

EI_SERIES_CUTOFF = 30.0
_EPS = 2.0 ** -52


def _ei_series(z: complex) -> complex:
    term = 1.0 + 0j
    total = 0j
    k = 1
    while True:
        term *= z / k
        add = term / k
        total += add
        if abs(add) <= _EPS * abs(total) or k > 500:
            break
        k += 1
    if k > 500:
        raise ConvergenceError("Ei power series did not converge")
    return CONSTANTS.euler_gamma + cmath.log(z) + total


def _e1_continued_fraction(w: complex) -> complex:
    # modified Lentz on E1(w) = exp(-w) / (w + 1 - 1/(w + 3 - 4/(w + 5 - ...)))
    tiny = 1e-300
    b = w + 1.0
    c = 1.0 / tiny
    d = 1.0 / b
    h = d
    for i in range(1, 5000):
        an = -float(i * i)
        b += 2.0
        d = 1.0 / (an * d + b)
        c = b + an / c
        delta = c * d
        h *= delta
        if abs(delta - 1.0) < 1e-16:
            return h * cmath.exp(-w)
    raise ConvergenceError("E1 continued fraction did not converge")


def _ei_asymptotic(z: complex) -> complex:
    term = 1.0 + 0j
    total = 1.0 + 0j
    best = math.inf
    for k in range(1, 200):
        nxt = term * k / z
        if abs(nxt) >= best:
            break
        best = abs(nxt)
        term = nxt
        total += term
        if abs(term) < _EPS * abs(total):
            break
    else:
        raise ConvergenceError("Ei asymptotic series did not reach tolerance")
    val = cmath.exp(z) / z * total
    if z.imag < 0:
        val -= 1j * math.pi
    elif z.imag > 0 or z.real < 0:
        val += 1j * math.pi
    return val


def exp_integral_ei(z):
    """Exponential integral Ei(z), principal branch (cut on the negative axis).

    Regimes: power series near the positive real axis or for small |z|,
    the E1 continued fraction for other |z| <= 30, and the asymptotic
    expansion truncated at its smallest term beyond |z| = 30. A real
    positive argument returns a real-valued result. On the negative real
    axis only the real part (the real principal-value Ei) is returned.
    """
    zc = complex(z)
    if zc == 0:
        raise DomainError("Ei is singular at z = 0")
    r = abs(zc)
    if r > EI_SERIES_CUTOFF:
        val = _ei_asymptotic(zc)
    # cancellation in the series costs about exp(|z| - Re z); cap it at ~e^4
    elif r <= 2.0 or r - zc.real <= 4.0:
        val = _ei_series(zc)
    else:
        # Ei(z) = -E1(-z) + i pi sgn(Im z)
        val = -_e1_continued_fraction(-zc)
        if zc.imag > 0:
            val += 1j * math.pi
        elif zc.imag < 0:
            val -= 1j * math.pi
        else:
            val += 1j * math.pi
    if zc.imag == 0.0:
        return complex(val.real, 0.0)
    return val


# ---------------------------------------------------------------------------
# Bernoulli numbers

BERNOULLI_MAX_BITS = 1 << 16


@lru_cache(maxsize=None)
def _bernoulli_table(n: int) -> tuple[Fraction, ...]:
    b = [Fraction(1)]
    for m in range(1, n + 1):
        # sum_{k=0}^{m} C(m+1, k) B_k = 0
        acc = Fraction(0)
        coeff = 1
        for k in range(m):
            acc += coeff * b[k]
            coeff = coeff * (m + 1 - k) // (k + 1)
        bm = -acc / (m + 1)
        if max(bm.numerator.bit_length(), bm.denominator.bit_length()) > BERNOULLI_MAX_BITS:
            raise OverflowError(f"B_{m} exceeds the exact-integer budget")
        b.append(bm)
    return tuple(b)


def bernoulli(n: int) -> Fraction:
    """Exact Bernoulli number B_n with B_1 = -1/2."""
    if n < 0:
        raise DomainError("bernoulli needs n >= 0")
    return _bernoulli_table(int(n))[n]


# ---------------------------------------------------------------------------
# Jacobi theta-type sums

_SMALL_X = 0.05


def _psi_direct(x: float, tol: float) -> float:
    total = 0.0
    n = 1
    while True:
        term = math.exp(-math.pi * n * n * x)
        total += term
        if term < tol * 1e-2:
            return total
        n += 1


def jacobi_psi(x: float, tol: float = 1e-15) -> float:
    """psi(x) = sum_{n>=1} exp(-pi n^2 x), x > 0."""
    if not x > 0:
        raise DomainError("jacobi_psi needs x > 0")
    if x < _SMALL_X:
        # 2 psi(x) + 1 = x^{-1/2} (2 psi(1/x) + 1)
        rx = math.sqrt(x)
        return (2.0 * _psi_direct(1.0 / x, tol * rx) + 1.0) / (2.0 * rx) - 0.5
    return _psi_direct(x, tol)


def jacobi_theta(x: float, tol: float = 1e-15) -> float:
    """Theta(x) = sum_{n in Z} exp(-pi n^2 x) = 2 psi(x) + 1."""
    return 2.0 * jacobi_psi(x, tol) + 1.0


def jacobi_psi_prime(x: float, tol: float = 1e-15) -> float:
    """d psi / dx = -sum pi n^2 exp(-pi n^2 x)."""
    if not x > 0:
        raise DomainError("jacobi_psi_prime needs x > 0")
    total = 0.0
    n = 1
    while True:
        term = math.pi * n * n * math.exp(-math.pi * n * n * x)
        total += term
        if term < tol * 1e-2 and n * n * x > 1.0:
            return -total
        n += 1


def jacobi_psi_weighted_deriv(x: float, tol: float = 1e-15) -> float:
    """d/dx [x^{3/2} psi'(x)] = sum (n^4 pi^2 x - 3/2 n^2 pi) x^{1/2} exp(-n^2 pi x).

    Only defined here on x >= 1, where the series converges fast.
    """
    if not x >= 1.0:
        raise DomainError("jacobi_psi_weighted_deriv needs x >= 1")
    rx = math.sqrt(x)
    total = 0.0
    n = 1
    while True:
        n2 = n * n
        term = (n2 * n2 * math.pi ** 2 * x - 1.5 * n2 * math.pi) * rx * math.exp(-n2 * math.pi * x)
        total += term
        if abs(term) < tol * 1e-2 and n2 * math.pi * x > 2.0:
            return total
        n += 1
