"""Integer-side prime staircases: sieve, pi, mu, Riemann's Pi, Chebyshev psi.

All staircases use the midpoint convention at their jumps (the value at a jump
is halfway between the left and right limits), unless ``convention="right"``
is passed, which gives the ordinary right-continuous count.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import DomainError, SieveBudgetError

__all__ = [
    "PrimeSieve",
    "StaircaseSample",
    "appendix_pi_integral_check",
    "big_pi",
    "big_pi_exact",
    "chebyshev_psi",
    "golden_formula_check",
    "golden_formula_rhs",
    "golden_tail_bound",
    "integer_root",
    "mobius",
    "mobius_invert_pi",
    "mobius_table",
    "prime_pi",
    "prime_power",
    "sieve",
]

SIEVE_BUDGET = 10 ** 8


@dataclass(frozen=True)
class StaircaseSample:
    x: float
    exact: float
    approx: float
    n_zeros_used: int


class PrimeSieve:
    """Primality bitmap over [0, limit]."""

    def __init__(self, limit: int, is_prime: np.ndarray):
        self.limit = int(limit)
        self.is_prime = is_prime
        self.is_prime.setflags(write=False)
        self._primes = np.flatnonzero(is_prime)
        self._cum_count = np.cumsum(is_prime, dtype=np.int64)
        self._cum_log = None

    def __repr__(self):
        return f"PrimeSieve(limit={self.limit})"

    def primes(self, upto: int | None = None) -> np.ndarray:
        if upto is None:
            return self._primes
        return self._primes[: np.searchsorted(self._primes, upto, side="right")]

    def pi(self, n: int) -> int:
        """Number of primes <= n (integer n, right-continuous)."""
        if n < 2:
            return 0
        self._cover(n)
        return int(self._cum_count[n])

    def cum_log(self) -> np.ndarray:
        if self._cum_log is None:
            logs = np.zeros(self.limit + 1)
            logs[self._primes] = np.log(self._primes)
            self._cum_log = np.cumsum(logs)
        return self._cum_log

    def _cover(self, x):
        if x > self.limit:
            raise SieveBudgetError(f"sieve limit {self.limit} is below x={x}")


def sieve(limit: int, allow_large: bool = False) -> PrimeSieve:
    """Sieve of Eratosthenes on a numpy bool array."""
    limit = int(limit)
    if limit < 2:
        raise DomainError("sieve limit must be >= 2")
    if limit > SIEVE_BUDGET and not allow_large:
        raise SieveBudgetError(f"limit {limit} exceeds the sieve budget {SIEVE_BUDGET}; pass allow_large=True")
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    flags[4::2] = False
    for p in range(3, math.isqrt(limit) + 1, 2):
        if flags[p]:
            flags[p * p::2 * p] = False
    return PrimeSieve(limit, flags)


# ---------------------------------------------------------------------------
# exact roots and prime powers

def integer_root(x, n: int) -> tuple[int, bool]:
    """(floor(x^{1/n}), whether x is exactly that integer to the n-th power)."""
    if x < 1:
        return 0, False
    m = int(round(float(x) ** (1.0 / n)))
    # float roots of near-perfect powers land one off either way
    while m ** n > x:
        m -= 1
    while (m + 1) ** n <= x:
        m += 1
    return m, m ** n == x


def prime_power(x, sv: PrimeSieve | None = None) -> tuple[int, int] | None:
    """(p, k) with x == p^k, or None."""
    if x != int(x) or x < 2:
        return None
    x = int(x)
    for k in range(int(math.log2(x)), 0, -1):
        m, exact = integer_root(x, k)
        if exact and m >= 2 and (sv.is_prime[m] if sv is not None else _is_prime_small(m)):
            return m, k
    return None


def _is_prime_small(n: int) -> bool:
    if n < 2:
        return False
    for p in range(2, math.isqrt(n) + 1):
        if n % p == 0:
            return False
    return True


def _check_x(x, sv: PrimeSieve):
    if not x >= 0 or not math.isfinite(x):
        raise DomainError("x must be a finite non-negative number")
    sv._cover(math.floor(x))


# ---------------------------------------------------------------------------
# staircases

def _pi_root(x, n: int, sv: PrimeSieve, convention: str) -> Fraction:
    """pi(x^{1/n}) with a half step when x^{1/n} is itself a prime."""
    m, exact = integer_root(x, n)
    c = sv.pi(m)
    if exact and convention == "midpoint" and m >= 2 and sv.is_prime[m]:
        return Fraction(2 * c - 1, 2)
    return Fraction(c)


def prime_pi(x, sv: PrimeSieve, convention: str = "midpoint") -> float:
    """pi(x); at a prime the value is pi(x) - 1/2 under the midpoint convention."""
    _check_x(x, sv)
    return float(_pi_root(x, 1, sv, convention))


def _max_order(x) -> int:
    return int(math.floor(math.log2(x))) if x >= 2 else 0


def big_pi_exact(x, sv: PrimeSieve, convention: str = "midpoint") -> Fraction:
    """Pi(x) = sum_n pi(x^{1/n}) / n as an exact rational (x integer or float)."""
    _check_x(x, sv)
    xx = Fraction(x) if not isinstance(x, int) else x
    total = Fraction(0)
    for n in range(1, _max_order(x) + 1):
        total += _pi_root(xx, n, sv, convention) / n
    return total


def big_pi(x, sv: PrimeSieve, convention: str = "midpoint") -> float:
    """Riemann's Pi(x) = sum over prime powers p^n <= x of 1/n."""
    return float(big_pi_exact(x, sv, convention))


def mobius(n: int) -> int:
    """mu(n): (-1)^k for a product of k distinct primes, 0 if a square divides n."""
    n = int(n)
    if n < 1:
        raise DomainError("mobius needs n >= 1")
    sign = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            sign = -sign
        p += 1 if p == 2 else 2
    return -sign if n > 1 else sign


def mobius_table(N: int) -> np.ndarray:
    """mu(0..N) by sieving over primes; entry 0 is 0."""
    mu = np.ones(N + 1, dtype=np.int8)
    mu[0] = 0
    if N < 2:
        return mu
    flags = sieve(max(N, 2)).is_prime
    for p in np.flatnonzero(flags):
        mu[p::p] *= -1
        mu[p * p::p * p] = 0
    return mu


def mobius_invert_pi(x, sv: PrimeSieve, convention: str = "midpoint") -> float:
    """pi(x) = sum_n mu(n)/n Pi(x^{1/n}), evaluated exactly in rationals.

    Pi(x^{1/n}) = sum_m pi(x^{1/(nm)})/m, so only integer roots of x are needed.
    """
    _check_x(x, sv)
    xx = Fraction(x) if not isinstance(x, int) else x
    total = Fraction(0)
    for n in range(1, _max_order(x) + 1):
        mu = mobius(n)
        if mu == 0:
            continue
        inner = Fraction(0)
        for m in range(1, _max_order(x) // n + 1):
            inner += _pi_root(xx, n * m, sv, convention) / m
        total += Fraction(mu, n) * inner
    return float(total)


def chebyshev_psi(x, sv: PrimeSieve, convention: str = "midpoint") -> float:
    """psi(x) = sum of log p over prime powers p^k <= x, half weight at a jump."""
    _check_x(x, sv)
    if x < 2:
        return 0.0
    cum = sv.cum_log()
    parts = []
    for k in range(1, _max_order(x) + 1):
        m, exact = integer_root(x, k)
        v = float(cum[m])
        if exact and convention == "midpoint" and sv.is_prime[m]:
            v -= 0.5 * math.log(m)
        parts.append(v)
    return math.fsum(parts)


# ---------------------------------------------------------------------------
# Mellin-transform checks

def _e1(w: complex) -> complex:
    # E1(w) = -Ei(-w) - i pi sgn(Im w), principal branch, Re w > 0
    from .special_fn import exp_integral_ei

    val = -exp_integral_ei(-w)
    if w.imag > 0:
        return val - 1j * math.pi
    if w.imag < 0:
        return val + 1j * math.pi
    return complex(val.real, 0.0)


def _prime_power_sum(s: complex, sv: PrimeSieve, x_max: float) -> complex:
    # sum_{p^n <= X} p^{-ns} / n
    primes = sv.primes(int(math.floor(x_max))).astype(float)
    logp = np.log(primes)
    re_parts, im_parts = [], []
    for n in range(1, _max_order(x_max) + 1):
        m = integer_root(x_max, n)[0]
        lp = logp[: np.searchsorted(primes, m, side="right")]
        if lp.size == 0:
            break
        terms = np.exp(-n * s * lp) / n
        re_parts.extend(terms.real[::-1])
        im_parts.extend(terms.imag[::-1])
    return complex(math.fsum(re_parts), math.fsum(im_parts))


def golden_formula_rhs(s, sv: PrimeSieve, x_max: float) -> complex:
    """int_0^inf Pi(x) x^{-s-1} dx, summed exactly over jumps up to x_max.

    Integrating the step function term by term gives (1/s) sum p^{-ns}/n. The
    jumps beyond x_max are replaced by their density 1/log x, contributing
    (1/s) int_X^inf x^{-s}/log x dx = E1((s-1) log X) / s.
    """
    s = complex(s)
    if not s.real > 1:
        raise DomainError("golden formula needs Re s > 1")
    _check_x(x_max, sv)
    head = _prime_power_sum(s, sv, x_max) / s
    return head + _e1((s - 1.0) * math.log(x_max)) / s


def golden_tail_bound(s, x_max: float) -> float:
    """|(1/s) sum_{p^n > X} p^{-ns}/n| <= (X^{1-sigma}/(sigma-1) + X^{-sigma}) / |s|."""
    s = complex(s)
    sig = s.real
    return (x_max ** (1.0 - sig) / (sig - 1.0) + x_max ** -sig) / abs(s)


def golden_formula_check(s, sv: PrimeSieve, x_max: float) -> float:
    """|log zeta(s)/s - int_0^inf Pi(x) x^{-s-1} dx|."""
    from .zeta_engine import zeta

    s = complex(s)
    if not s.real > 1:
        raise DomainError("golden formula needs Re s > 1")
    lhs = cmath.log(zeta(s)) / s
    return abs(lhs - golden_formula_rhs(s, sv, x_max))


def appendix_pi_integral_check(s: float, sv: PrimeSieve, x_max: float) -> float:
    """|log zeta(s)/s - int_2^inf pi(x) / (x (x^s - 1)) dx| for real s > 1.

    Between consecutive primes a < b, pi is constant and
    int_a^b dx / (x (x^s - 1)) = [log(1 - x^{-s})]_a^b / s.
    Beyond the largest prime below x_max the tail uses pi(x) ~ x/log x less the
    constant pi(X) already accounted for, as in the golden formula.
    """
    from .zeta_engine import zeta

    s = float(s)
    if not s > 1:
        raise DomainError("appendix integral check needs s > 1")
    _check_x(x_max, sv)
    p = sv.primes(int(math.floor(x_max))).astype(float)
    g = np.log1p(-np.exp(-s * np.log(p)))  # log(1 - p^{-s})
    k = np.arange(1, len(p) + 1, dtype=float)
    edges = np.append(g[1:], math.log1p(-x_max ** -s))  # right end of each piece
    head = math.fsum(k * (edges - g)) / s
    # on [X, inf): pi(X) times the remaining kernel integral, plus the primes past X
    # counted through their density, sum_{p > X} p^{-s} ~ E1((s-1) log X)
    tail = -len(p) * edges[-1] / s + _e1(complex((s - 1.0) * math.log(x_max))).real / s
    rhs = head + tail
    lhs = math.log(zeta(s).real) / s
    return abs(lhs - rhs)
