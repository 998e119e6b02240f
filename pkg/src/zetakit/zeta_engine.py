"""Dirichlet eta, Riemann zeta over the whole plane, xi and Xi.

Evaluation dispatch for ``zeta``:

* Re s large enough that the plain Dirichlet series needs only a few hundred
  terms: direct summation.
* 0 < Re s (and the rest of Re s > 1): zeta = eta / (1 - 2^{1-s}), with the
  alternating series accelerated by Chebyshev-weighted averaging of its partial
  sums. Inside small disks around s_k = 1 + 2 pi i k / log 2, where numerator
  and denominator both vanish, the non-alternating representation
  zeta(s) = 1/(s-1) sum (n/(n+1)^s - (n-s)/n^s) is used instead, with
  Richardson extrapolation on its partial sums.
* Re s <= 0: the functional equation.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import ConvergenceError, DomainError, EmptyTableError, PoleError
from .special_fn import CONSTANTS, log_gamma, sin_pi

__all__ = [
    "DomainRegion",
    "EvalOptions",
    "classify",
    "eta",
    "eta_many",
    "euler_product",
    "hadamard_zeta",
    "xi",
    "xi_big",
    "xi_big_fourier",
    "xi_big_integral",
    "xi_product",
    "zeta",
    "zeta_with_error",
]

LOG2 = math.log(2.0)
LOGPI = math.log(math.pi)
_CVZ_RATE = math.log(3.0 + math.sqrt(8.0))


@dataclass(frozen=True)
class EvalOptions:
    tol: float = 1e-13
    max_terms: int = 20000
    eta_singularity_guard: float = 1e-3

    def __post_init__(self):
        if not self.tol > 0:
            raise DomainError("tol must be positive")
        if self.max_terms < 16:
            raise DomainError("max_terms must be at least 16")
        if self.eta_singularity_guard < 0:
            raise DomainError("eta_singularity_guard must be non-negative")


DEFAULT_OPTIONS = EvalOptions()


class DomainRegion:
    RIGHT_HALF = "RightHalf"
    CRITICAL_STRIP = "CriticalStrip"
    LEFT_HALF = "LeftHalf"


def classify(s) -> str:
    """Which of the three classical representations covers ``s``."""
    s = complex(s)
    if s == 1:
        raise PoleError("pole at s=1")
    if s.real > 1:
        return DomainRegion.RIGHT_HALF
    if s.real > 0:
        return DomainRegion.CRITICAL_STRIP
    return DomainRegion.LEFT_HALF


def _as_complex(s) -> complex:
    s = complex(s)
    if not (math.isfinite(s.real) and math.isfinite(s.imag)):
        raise DomainError("argument must be finite")
    return s


# ---------------------------------------------------------------------------
# eta

@lru_cache(maxsize=64)
def _cvz_weights(n: int) -> np.ndarray:
    # (-1)^k (d_n - d_k) / d_n with d_k = n sum_{i<=k} (n+i-1)! 4^i / ((n-i)! (2i)!),
    # built in log space because d_n ~ (3+sqrt 8)^n overflows past n ~ 400
    i = np.arange(n + 1, dtype=float)
    lg = np.vectorize(math.lgamma)
    log_terms = lg(n + i) - lg(n - i + 1) - lg(2 * i + 1) + i * math.log(4.0)
    terms = np.exp(log_terms - log_terms.max())
    tail = np.cumsum(terms[::-1])[::-1]
    w = tail[1:] / tail[0]
    w[1::2] *= -1.0
    w.setflags(write=False)
    return w


def _cvz_order(t: float, tol: float) -> int:
    # |error| <= 3 (1 + 2|t|) exp(pi |t| / 2) / (3 + sqrt 8)^n
    need = math.log(3.0 * (1.0 + 2.0 * abs(t))) + 0.5 * math.pi * abs(t) - math.log(tol)
    return max(8, math.ceil(need / _CVZ_RATE))


def _eta_core(s: complex, opts: EvalOptions) -> tuple[complex, float]:
    n = _cvz_order(s.imag, opts.tol)
    if n > opts.max_terms:
        raise ConvergenceError(
            f"eta at Im s={s.imag:g} needs {n} terms, more than max_terms={opts.max_terms}")
    w = _cvz_weights(n)
    k = np.arange(1, n + 1, dtype=float)
    val = complex(np.dot(w, np.exp(-s * np.log(k))))
    # truncation bound plus accumulated rounding
    err = max(opts.tol, 4.0 * n * 2.2e-16)
    return val, err


def eta(s, opts: EvalOptions = DEFAULT_OPTIONS) -> complex:
    """Dirichlet eta(s) = sum (-1)^{n+1} n^{-s}, Re s > 0."""
    s = _as_complex(s)
    if not s.real > 0:
        raise DomainError("eta series needs Re s > 0")
    return _eta_core(s, opts)[0]


def eta_many(ts: np.ndarray, sigma: float = 0.5, tol: float = 1e-13,
             chunk: int = 512) -> np.ndarray:
    """eta(sigma + i t) for an array of heights, vectorised for zero scans."""
    ts = np.asarray(ts, dtype=float)
    out = np.empty(ts.shape, dtype=complex)
    if ts.size == 0:
        return out
    flat_t = ts.ravel()
    flat_out = out.ravel()
    n = _cvz_order(float(np.max(np.abs(flat_t))), tol)
    w = _cvz_weights(n)
    logk = np.log(np.arange(1, n + 1, dtype=float))
    amp = w * np.exp(-sigma * logk)
    for a in range(0, flat_t.size, chunk):
        tt = flat_t[a:a + chunk]
        phase = np.exp(-1j * np.outer(tt, logk))
        flat_out[a:a + chunk] = phase @ amp
    return out


# ---------------------------------------------------------------------------
# zeta

def _one_minus_2pow(s: complex) -> complex:
    # 1 - 2^{1-s} without cancellation near s = 1
    return -cmath.exp((1.0 - s) * LOG2) + 1.0 if abs(s - 1) > 1e-3 else -_expm1((1.0 - s) * LOG2)


def _expm1(z: complex) -> complex:
    if z.imag == 0:
        return complex(math.expm1(z.real))
    # expm1(a+ib) = expm1(a) cos b - 2 sin^2(b/2) + i e^a sin b
    a, b = z.real, z.imag
    return complex(math.expm1(a) * math.cos(b) - 2.0 * math.sin(0.5 * b) ** 2,
                   math.exp(a) * math.sin(b))


def _nearest_eta_singularity(s: complex) -> tuple[int, float]:
    k = round(s.imag * LOG2 / (2.0 * math.pi))
    sk = complex(1.0, 2.0 * math.pi * k / LOG2)
    return k, abs(s - sk)


def _zeta_guard_series(s: complex, n0: int = 64, levels: int = 9) -> tuple[complex, float]:
    """zeta(s) = 1/(s-1) sum_n (n/(n+1)^s - (n-s)/n^s), Richardson-accelerated.

    The partial sums approach the limit as c_0 N^{-s} + c_1 N^{-s-1} + ...;
    doubling N and eliminating one exponent per level gives ~machine precision.
    """
    nmax = n0 << levels
    n = np.arange(1, nmax + 1, dtype=float)
    terms = n * np.exp(-s * np.log1p(n)) - (n - s) * np.exp(-s * np.log(n))
    partial = np.cumsum(terms)
    table = [[complex(partial[(n0 << j) - 1]) / (s - 1.0)] for j in range(levels + 1)]
    for k in range(1, levels + 1):
        r = cmath.exp(-(s + k - 1) * LOG2)
        for j in range(k, levels + 1):
            table[j].append((table[j][k - 1] - r * table[j - 1][k - 1]) / (1.0 - r))
    best = table[levels][levels]
    return best, abs(best - table[levels][levels - 1]) + 1e-15 * abs(best)


def _zeta_direct(s: complex, opts: EvalOptions) -> tuple[complex, float] | None:
    # plain Dirichlet series when N^{1-sigma}/(sigma-1) <= tol for a small N
    sig = s.real
    if sig <= 3.0:
        return None
    n = math.ceil((opts.tol * (sig - 1.0)) ** (-1.0 / (sig - 1.0)))
    if n > 256:
        return None
    k = np.arange(n, 0, -1, dtype=float)  # smallest terms first
    val = complex(np.sum(np.exp(-s * np.log(k))))
    return val, n ** (1.0 - sig) / (sig - 1.0)


def _zeta_right(s: complex, opts: EvalOptions) -> tuple[complex, float]:
    """zeta for Re s > 0."""
    direct = _zeta_direct(s, opts)
    if direct is not None:
        return direct
    k, dist = _nearest_eta_singularity(s)
    if k != 0 and dist < opts.eta_singularity_guard:
        return _zeta_guard_series(s)
    if s == 1:
        raise PoleError("pole at s=1")
    e, err = _eta_core(s, opts)
    den = _one_minus_2pow(s)
    return e / den, err / abs(den)


def _zeta_left(s: complex, opts: EvalOptions) -> tuple[complex, float]:
    """zeta(s) = 2^s pi^{s-1} sin(pi s / 2) Gamma(1-s) zeta(1-s), Re s <= 0."""
    refl, err = _zeta_right(1.0 - s, opts)
    sp = sin_pi(0.5 * s)
    if sp == 0:
        return 0j, 0.0
    factor = cmath.exp(s * LOG2 + (s - 1.0) * LOGPI + log_gamma(1.0 - s)) * sp
    return factor * refl, abs(factor) * err


def zeta_with_error(s, opts: EvalOptions = DEFAULT_OPTIONS) -> tuple[complex, float]:
    """zeta(s) together with an absolute error estimate.

    For |Im s| > 50 the estimate is inflated to reflect the growing cost of the
    alternating-series route; nothing like the Riemann-Siegel formula is used.
    """
    s = _as_complex(s)
    if s == 1:
        raise PoleError("pole at s=1")
    if abs(s) < 1e-7:
        # zeta(0) = -1/2, zeta'(0) = -log(2 pi)/2; the next term is below 1e-15
        val = -0.5 - 0.5 * math.log(2.0 * math.pi) * s
        return (complex(val.real, 0.0) if s.imag == 0 else val), 1e-15
    if s.real > 0:
        val, err = _zeta_right(s, opts)
    else:
        val, err = _zeta_left(s, opts)
    if abs(s.imag) > 50:
        err *= abs(s.imag) / 50.0
    if s.imag == 0:
        val = complex(val.real, 0.0)  # real on the real axis, no stray -0j
    return val, err


def zeta(s, opts: EvalOptions = DEFAULT_OPTIONS) -> complex:
    """Riemann zeta(s) for any complex s != 1."""
    return zeta_with_error(s, opts)[0]


def _s_minus_1_zeta(s: complex, opts: EvalOptions) -> complex:
    if abs(s - 1) < 1e-8:
        # (s-1) zeta(s) = 1 + gamma (s-1) + O((s-1)^2)
        return 1.0 + CONSTANTS.euler_gamma * (s - 1)
    return (s - 1.0) * zeta(s, opts)


# ---------------------------------------------------------------------------
# products

def euler_product(s, p_max: int) -> complex:
    """prod_{p <= p_max} 1 / (1 - p^{-s}), Re s > 1."""
    from .prime_arith import sieve

    s = _as_complex(s)
    if not s.real > 1:
        raise DomainError("Euler product needs Re s > 1")
    if p_max < 2:
        raise DomainError("p_max must be >= 2")
    primes = sieve(int(p_max)).primes().astype(float)
    logs = np.log1p(-np.exp(-s * np.log(primes)))
    total = math.fsum(logs.real) + 1j * math.fsum(logs.imag)
    return cmath.exp(-total)


def _zero_ordinates(zeros) -> np.ndarray:
    if hasattr(zeros, "ordinates"):
        t = zeros.ordinates()
    else:
        t = np.asarray([getattr(z, "t", z) for z in zeros], dtype=float)
    if t.size == 0:
        raise EmptyTableError("zero table is empty")
    return t


def _paired_log_product(s: complex, ts: np.ndarray) -> complex:
    # (1 - s/rho)(1 - s/(1-rho)) = 1 + s(s-1)/|rho|^2 for rho = 1/2 + it
    f = 1.0 + s * (s - 1.0) / (0.25 + ts * ts)
    logs = np.log(f.astype(complex))
    return math.fsum(logs.real) + 1j * math.fsum(logs.imag)


def xi_product(s, zeros) -> complex:
    """xi(0) prod over zero pairs of (1 - s/rho)(1 - s/(1 - rho)), xi(0) = 1/2."""
    s = _as_complex(s)
    ts = _zero_ordinates(zeros)
    return 0.5 * cmath.exp(_paired_log_product(s, ts))


def hadamard_zeta(s, zeros) -> complex:
    """pi^{s/2} / (2 (s-1) Gamma(1 + s/2)) prod over zero pairs (1 - s/rho)."""
    s = _as_complex(s)
    if s == 1:
        raise PoleError("pole at s=1")
    ts = _zero_ordinates(zeros)
    logpre = 0.5 * s * LOGPI - log_gamma(1.0 + 0.5 * s) if not _neg_even(s) else None
    if logpre is None:
        # Gamma(1 + s/2) has a pole: trivial zero of zeta
        return 0j
    return cmath.exp(logpre + _paired_log_product(s, ts)) / (2.0 * (s - 1.0))


def _neg_even(s: complex) -> bool:
    return s.imag == 0 and s.real <= -2 and s.real == 2 * math.floor(s.real / 2)


# ---------------------------------------------------------------------------
# xi and Xi

def xi(s, opts: EvalOptions = DEFAULT_OPTIONS) -> complex:
    """Riemann xi(s) = 1/2 s (s-1) pi^{-s/2} Gamma(s/2) zeta(s).

    Computed as pi^{-s/2} Gamma(1 + s/2) (s-1) zeta(s), which has no 0*inf at
    s = 0 or s = 1; the left half-plane is mapped over by xi(s) = xi(1-s).
    """
    s = _as_complex(s)
    if s.real < 0.5:
        s = 1.0 - s
    return cmath.exp(-0.5 * s * LOGPI + log_gamma(1.0 + 0.5 * s)) * _s_minus_1_zeta(s, opts)


def xi_big(t: float, opts: EvalOptions = DEFAULT_OPTIONS) -> float:
    """Xi(t) = xi(1/2 + it), real for real t."""
    from .errors import ConsistencyError

    val = xi(complex(0.5, t), opts)
    if abs(val.imag) > 1e-10 * (1.0 + abs(val.real)):
        raise ConsistencyError(f"Xi({t}) has imaginary residual {val.imag:.3e}")
    return val.real


def xi_big_integral(t: float, tol: float = 1e-12) -> float:
    """Xi(t) = 1/2 - (t^2 + 1/4) int_1^inf psi(x) x^{-3/4} cos(t/2 log x) dx."""
    from scipy import integrate

    from .special_fn import jacobi_psi

    def integrand(x):
        return jacobi_psi(x) * x ** -0.75 * math.cos(0.5 * t * math.log(x))

    # psi(x) < 1e-30 beyond x = 22
    val, err = integrate.quad(integrand, 1.0, 25.0, epsabs=tol * 1e-3, epsrel=1e-14, limit=400)
    weight = t * t + 0.25
    if weight * err > max(tol, 1e-8):
        raise ConvergenceError(f"Xi integral at t={t} did not converge (err {weight * err:.2e})")
    return 0.5 - weight * val


def _phi_kernel(u: float) -> float:
    # Phi(u) = sum_n pi n^2 (2 pi n^2 e^{4u} - 3) exp(5u - pi n^2 e^{4u})
    e4 = math.exp(4.0 * u)
    total = 0.0
    n = 1
    while True:
        a = math.pi * n * n
        term = a * (2.0 * a * e4 - 3.0) * math.exp(5.0 * u - a * e4)
        total += term
        if abs(term) < 1e-18 * max(abs(total), 1e-300) or a * e4 > 750:
            return total
        n += 1


def xi_big_fourier(t: float, tol: float = 1e-12) -> float:
    """Xi(t) via the Fourier kernel: Xi(t/2) = 8 int_0^inf Phi(u) cos(u t) du."""
    from scipy import integrate

    # Phi(u) < 1e-200 for u > 1.6
    val, err = integrate.quad(lambda u: _phi_kernel(u) * math.cos(2.0 * t * u), 0.0, 1.6,
                              epsabs=tol * 1e-3, epsrel=1e-14, limit=400)
    if 8.0 * err > max(tol, 1e-6):
        raise ConvergenceError(f"Xi Fourier integral at t={t} did not converge")
    return 8.0 * val
