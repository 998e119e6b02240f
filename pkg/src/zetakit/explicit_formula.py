"""Explicit formulas: prime staircases rebuilt from the zeros of zeta.

    Pi(x)  = Li(x) - sum_rho Li(x^rho) - log 2 + int_x^inf dt / (t (t^2 - 1) log t)
    psi(x) = x - log 2pi - 1/2 log(1 - x^-2) - sum_rho x^rho / rho

Zeros enter in conjugate pairs rho = 1/2 + it, 1 - rho = 1/2 - it, so each
pair contributes 2 Re(.) and the results are real by construction. Li(x^rho)
means Ei(rho log x) on the principal branch. Pair sums run in increasing t and
are reduced with math.fsum, which is exactly rounded and therefore independent
of summation order.
"""
from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, EmptyTableError
from .prime_arith import (PrimeSieve, StaircaseSample, big_pi, chebyshev_psi,
                          mobius, prime_power)
from .special_fn import exp_integral_ei

__all__ = [
    "ExplicitResult",
    "density_identity_lhs",
    "density_term",
    "li",
    "li_complex",
    "pi_explicit",
    "pi_explicit_result",
    "report_to_csv",
    "report_to_json",
    "riemann_big_pi_explicit",
    "staircase_report",
    "tail_integral",
    "von_mangoldt_psi_explicit",
]

LOG2 = math.log(2.0)
LOG_2PI = math.log(2.0 * math.pi)


@dataclass(frozen=True)
class ExplicitResult:
    value: float
    n_zero_pairs: int
    smooth_part: float
    oscillatory_part: float
    tail_part: float


def _ordinates(zeros, n_pairs: int | None) -> np.ndarray:
    if zeros is None:
        t = np.empty(0)
    elif hasattr(zeros, "ordinates"):
        t = zeros.ordinates()
    else:
        t = np.asarray([getattr(z, "t", z) for z in zeros], dtype=float)
    if n_pairs is not None:
        if n_pairs < 0:
            raise DomainError("n_pairs must be non-negative")
        if n_pairs > t.size:
            raise DomainError(f"zero table holds {t.size} zeros, {n_pairs} requested")
        t = t[:n_pairs]
    return np.sort(t)


def li(x: float) -> float:
    """Principal-value logarithmic integral int_0^x dt / log t."""
    x = float(x)
    if not x > 0:
        raise DomainError("li needs x > 0")
    if abs(x - 1.0) < 1e-12:
        raise DomainError("li is singular at x = 1")
    return exp_integral_ei(math.log(x)).real


def li_complex(x: float, rho: complex) -> complex:
    """Li(x^rho) := Ei(rho log x)."""
    rho = complex(rho)
    if not x > 1:
        raise DomainError("li_complex needs x > 1")
    if rho.imag == 0:
        raise DomainError("li_complex needs Im rho != 0")
    return exp_integral_ei(rho * math.log(x))


def tail_integral(x: float, tol: float = 1e-10) -> float:
    """int_x^inf dt / (t (t^2 - 1) log t)."""
    from scipy import integrate

    x = float(x)
    if not x > 1:
        raise DomainError("tail_integral needs x > 1")

    def f(t):
        return 1.0 / (t * (t * t - 1.0) * math.log(t))

    # beyond B the integrand is below 1/((1 - B^-2) t^3 log B), whose integral
    # is 1/(2 (1 - B^-2) B^2 log B)
    B = max(2.0 * x, 10.0)
    while 1.0 / (2.0 * (1.0 - B ** -2) * B * B * math.log(B)) > 0.25 * tol:
        B *= 2.0
    pts = np.geomspace(x, B, 12)
    total, err = [], 0.0
    for a, b in zip(pts[:-1], pts[1:]):
        v, e = integrate.quad(f, a, b, epsabs=0.05 * tol, epsrel=1e-13, limit=200)
        total.append(v)
        err += e
    bound = 1.0 / (2.0 * (1.0 - B ** -2) * B * B * math.log(B))
    return math.fsum(total) + 0.5 * bound


def _osc_bigpi(x: float, ts: np.ndarray) -> float:
    lx = math.log(x)
    return -math.fsum(2.0 * exp_integral_ei(complex(0.5, t) * lx).real for t in ts)


def riemann_big_pi_explicit(x: float, zeros, n_pairs: int | None = None,
                            tol: float = 1e-10) -> ExplicitResult:
    """Pi(x) from Li(x), the zero pairs, -log 2 and the tail integral."""
    x = float(x)
    if not x > 1:
        raise DomainError("explicit formula for Pi needs x > 1")
    if _ordinates(zeros, None).size == 0:
        raise EmptyTableError("zero table is empty")
    ts = _ordinates(zeros, n_pairs)
    smooth = li(x) - LOG2
    tail = tail_integral(x, tol)
    osc = _osc_bigpi(x, ts)
    return ExplicitResult(smooth + osc + tail, int(ts.size), smooth, osc, tail)


def von_mangoldt_psi_explicit(x: float, zeros, n_pairs: int | None = None) -> ExplicitResult:
    """psi(x) = x - log 2pi - 1/2 log(1 - x^-2) - sum over pairs 2 Re(x^rho / rho)."""
    x = float(x)
    if not x > 1:
        raise DomainError("explicit formula for psi needs x > 1")
    ts = _ordinates(zeros, n_pairs)
    smooth = x - LOG_2PI - 0.5 * math.log1p(-1.0 / (x * x))
    rho = 0.5 + 1j * ts
    terms = 2.0 * (np.exp(rho * math.log(x)) / rho).real
    osc = -math.fsum(terms)
    return ExplicitResult(smooth + osc, int(ts.size), smooth, osc, 0.0)


def pi_explicit_result(x: float, zeros, n_terms: int | None = None) -> ExplicitResult:
    """pi(x) = sum_n mu(n)/n Pi(x^{1/n}), each Pi from the explicit formula.

    ``n_terms`` is the number of zero pairs used in every Pi evaluation. Terms
    with x^{1/n} < 2 vanish and are skipped. The parts of the result are the
    same Mobius combinations of the parts of each Pi.
    """
    x = float(x)
    if not x > 2:
        raise DomainError("pi_explicit needs x > 2")
    parts = {"value": [], "smooth_part": [], "oscillatory_part": [], "tail_part": []}
    used = 0
    n = 1
    while True:
        y = x ** (1.0 / n)
        if y < 2.0:
            break
        mu = mobius(n)
        if mu != 0:
            r = riemann_big_pi_explicit(y, zeros, n_terms)
            used = r.n_zero_pairs
            for k in parts:
                parts[k].append(mu / n * getattr(r, k))
        n += 1
    tot = {k: math.fsum(v) for k, v in parts.items()}
    return ExplicitResult(tot["value"], used, tot["smooth_part"], tot["oscillatory_part"], tot["tail_part"])


def pi_explicit(x: float, zeros, n_terms: int | None = None) -> float:
    """pi(x) from the explicit formula for Pi and Mobius inversion."""
    return pi_explicit_result(x, zeros, n_terms).value


def density_term(x: float, alpha: float) -> float:
    """2 x^{-1/2} cos(alpha log x) = x^{rho-1} + x^{-rho} for rho = 1/2 + i alpha."""
    if not x > 1:
        raise DomainError("density_term needs x > 1")
    return 2.0 * math.cos(alpha * math.log(x)) / math.sqrt(x)


def density_identity_lhs(x: float, alpha: float) -> float:
    """x^{rho-1} + x^{-rho} evaluated in complex arithmetic (imaginary parts cancel)."""
    rho = complex(0.5, alpha)
    return (x ** (rho - 1.0) + x ** (-rho)).real


# ---------------------------------------------------------------------------
# staircase comparison

JUMP_NUDGE = 1e-9


def staircase_report(x_grid, zeros, sv: PrimeSieve, kind: str = "psi",
                     n_pairs: int | None = None, at_jumps: str = "midpoint") -> list[StaircaseSample]:
    """Rows (x, exact staircase, explicit-formula value, pairs used), grid order kept.

    ``kind`` is "psi" or "bigpi". At prime powers the exact column takes the
    midpoint value; with ``at_jumps="nudge"`` such abscissae are moved up by
    1e-9 so both columns are evaluated just off the jump.
    """
    if kind not in ("psi", "bigpi"):
        raise DomainError(f"unknown staircase kind {kind!r}")
    if at_jumps not in ("midpoint", "nudge"):
        raise DomainError(f"unknown jump handling {at_jumps!r}")
    rows = []
    for x in x_grid:
        x = float(x)
        if not x > 2:
            raise DomainError("staircase grid values must exceed 2")
        if at_jumps == "nudge" and x == int(x) and prime_power(int(x), sv) is not None:
            x = x + JUMP_NUDGE
        if kind == "psi":
            exact = chebyshev_psi(x, sv)
            res = von_mangoldt_psi_explicit(x, zeros, n_pairs)
        else:
            exact = big_pi(x, sv)
            res = riemann_big_pi_explicit(x, zeros, n_pairs)
        rows.append(StaircaseSample(x, exact, res.value, res.n_zero_pairs))
    return rows


FIELDS = ("x", "exact", "approx", "n_zeros_used")


def _fmt(v) -> str:
    return str(v) if isinstance(v, int) else f"{v:.15g}"


def report_to_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(FIELDS)
    for r in rows:
        w.writerow([_fmt(getattr(r, f)) for f in FIELDS])
    return buf.getvalue()


def report_to_json(rows) -> str:
    out = [{f: float(_fmt(getattr(r, f))) if f != "n_zeros_used" else r.n_zeros_used
            for f in FIELDS} for r in rows]
    return json.dumps(out, indent=1) + "\n"
