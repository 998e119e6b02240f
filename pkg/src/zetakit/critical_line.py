"""Riemann-Siegel theta, Z(t), zero scanning on the critical line and N(T).

Zeros are stored as ordinates t (rho = 1/2 + it). A scan evaluates Z on a
uniform grid, brackets every sign change and bisects all brackets at once as
numpy arrays. The count of a finished scan is checked against

    N(T) = theta(T)/pi + 1 + arg zeta(1/2 + iT) / pi,

with the argument followed continuously along the horizontal segment
2 + iT -> 1/2 + iT.
"""
from __future__ import annotations

import cmath
import io
import math
import os
import tempfile
from dataclasses import dataclass

import numpy as np

from .errors import (CacheCorruptionError, ConsistencyError, DomainError,
                     MissedZerosError)
from .special_fn import log_gamma
from .zeta_engine import eta_many, zeta

__all__ = [
    "CountReport",
    "ZeroOrdinate",
    "ZeroTable",
    "count_zeros_formula",
    "count_zeros_main_term",
    "extend_table",
    "find_zeros",
    "read_table",
    "table_from_csv",
    "table_to_csv",
    "theta_exact",
    "theta_rs",
    "theta_rs_error",
    "verify_count",
    "write_table",
    "z_function",
    "z_many",
]

LOGPI = math.log(math.pi)
LOG2 = math.log(2.0)
CSV_HEADER = "index,t,err"
SIG_DIGITS = 15


def _q(x: float) -> float:
    """Round to 15 significant digits so text and binary forms agree exactly."""
    return float(f"{x:.{SIG_DIGITS}g}")


def _q_up(x: float) -> float:
    # like _q but never below x (error bounds must stay bounds)
    y = _q(x)
    if y < x:
        y = _q(y + abs(y) * 10.0 ** (1 - SIG_DIGITS))
    return y


# ---------------------------------------------------------------------------
# theta and Z

def theta_rs(t: float) -> float:
    """Asymptotic theta(t) ~ t/2 log(t/2pi) - t/2 - pi/8 + 1/(48 t)."""
    if not t > 0:
        raise DomainError("theta_rs needs t > 0")
    return 0.5 * t * math.log(t / (2.0 * math.pi)) - 0.5 * t - math.pi / 8.0 + 1.0 / (48.0 * t)


def theta_rs_error(t: float) -> float:
    """Size of the first omitted term, 7/(5760 t^3); meaningless for t below ~5."""
    if not t > 0:
        raise DomainError("theta_rs needs t > 0")
    return 7.0 / (5760.0 * t ** 3)


def theta_exact(t):
    """theta(t) = Im log Gamma(1/4 + it/2) - (t/2) log pi; scalar or array."""
    if np.ndim(t) == 0:
        t = float(t)
        return log_gamma(complex(0.25, 0.5 * t)).imag - 0.5 * t * LOGPI
    t = np.asarray(t, dtype=float)
    return log_gamma(0.25 + 0.5j * t).imag - 0.5 * t * LOGPI


def z_function(t: float) -> float:
    """Z(t) = exp(i theta(t)) zeta(1/2 + it), real with |Z| = |zeta|."""
    t = float(t)
    val = cmath.exp(1j * theta_exact(t)) * zeta(complex(0.5, t))
    if abs(val.imag) > 1e-8 * (1.0 + abs(val.real)):
        raise ConsistencyError(f"Z({t}) has imaginary residual {val.imag:.3e}")
    return val.real


def z_many(ts, tol: float = 1e-13) -> np.ndarray:
    """Vectorised Z over an array of heights (no reality assertion)."""
    ts = np.asarray(ts, dtype=float)
    s = 0.5 + 1j * ts
    # 1 - 2^{1-s}; never zero on the critical line
    den = 1.0 - np.exp((1.0 - s) * LOG2)
    z = eta_many(np.abs(ts), tol=tol)
    z = np.where(ts < 0, np.conj(z), z) / den
    return (np.exp(1j * theta_exact(ts)) * z).real


# ---------------------------------------------------------------------------
# tables

@dataclass(frozen=True)
class ZeroOrdinate:
    index: int
    t: float
    err: float


@dataclass(frozen=True)
class ZeroTable:
    zeros: tuple = ()
    t_max_scanned: float = 0.0
    t_min_scanned: float = 0.0

    def __len__(self):
        return len(self.zeros)

    def __iter__(self):
        return iter(self.zeros)

    def __getitem__(self, i):
        return self.zeros[i]

    def ordinates(self) -> np.ndarray:
        return np.array([z.t for z in self.zeros], dtype=float)

    def first(self, n: int) -> "ZeroTable":
        return ZeroTable(tuple(self.zeros[:n]), self.t_max_scanned, self.t_min_scanned)

    def count_upto(self, T: float) -> int:
        return int(np.searchsorted(self.ordinates(), T, side="right"))


@dataclass
class CountReport:
    T: float
    table_count: int
    expected: float
    theta_term: float
    arg_term: float
    passed: bool
    offset: int = 0

    def line(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        return (f"verify_count T={self.T:g}: table {self.table_count}, "
                f"N(T) = {self.expected:.6f} -> {round(self.expected)} {tag}")


def count_zeros_main_term(T: float) -> float:
    """(T/2pi)(log(T/2pi) - 1), the leading term of N(T)."""
    if T < 3:
        raise DomainError("N(T) formula needs T >= 3")
    u = T / (2.0 * math.pi)
    return u * (math.log(u) - 1.0)


def count_zeros_formula(T: float) -> float:
    """(T/2pi) log(T/2pi) - T/2pi + 7/8."""
    return count_zeros_main_term(T) + 0.875


def _arg_zeta_on_line(T: float, sigma_start: float = 2.0) -> float:
    """arg zeta(1/2 + iT) continued from the real-positive region at sigma = 2."""
    # Re zeta(2 + iT) >= 2 - zeta(2) > 0, so the principal arg is the right start
    def z(sig):
        return zeta(complex(sig, T))

    sigmas = list(np.linspace(sigma_start, 0.5, 65))
    vals = [z(s) for s in sigmas]
    total = cmath.phase(vals[0])
    i = 0
    while i < len(sigmas) - 1:
        d = cmath.phase(vals[i + 1] / vals[i])
        if abs(d) > 0.5 and sigmas[i] - sigmas[i + 1] > 1e-9:
            mid = 0.5 * (sigmas[i] + sigmas[i + 1])
            sigmas.insert(i + 1, mid)
            vals.insert(i + 1, z(mid))
            continue
        total += d
        i += 1
    return total


def _n_of_t(T: float) -> tuple[float, float, float]:
    th = theta_exact(T) / math.pi
    ar = _arg_zeta_on_line(T) / math.pi
    return th + 1.0 + ar, th, ar


def verify_count(zeros: ZeroTable, T: float) -> CountReport:
    """Compare the table's count of zeros up to T with round(N(T))."""
    T = float(T)
    if T > zeros.t_max_scanned * (1 + 1e-15):
        raise DomainError(f"T={T:g} beyond scanned range {zeros.t_max_scanned:g}")
    if T < zeros.t_min_scanned:
        raise DomainError(f"T={T:g} below scanned range {zeros.t_min_scanned:g}")
    if zeta(complex(0.5, T)) == 0:
        raise DomainError("verify_count needs zeta(1/2 + iT) != 0")
    offset = 0
    if zeros.t_min_scanned > 1.0:
        offset = round(_n_of_t(zeros.t_min_scanned)[0])
    count = offset + zeros.count_upto(T)
    n, th, ar = _n_of_t(T)
    return CountReport(T, count, n, th, ar, count == round(n), offset)


def _refine(lo: np.ndarray, hi: np.ndarray, slo: np.ndarray, tol: float) -> tuple[np.ndarray, np.ndarray]:
    # vectorised bisection; every bracket keeps a sign change
    lo, hi = lo.copy(), hi.copy()
    while lo.size and np.max(hi - lo) > 2.0 * tol:
        mid = 0.5 * (lo + hi)
        zm = z_many(mid)
        same = np.sign(zm) == slo
        exact = zm == 0
        lo = np.where(same & ~exact, mid, lo)
        hi = np.where(~same | exact, mid, hi)
        # an exact zero at mid: collapse the bracket onto it
        lo = np.where(exact, mid, lo)
        if np.all(hi - lo <= np.spacing(hi) * 4):
            break
    return lo, hi


def _scan(t_min: float, t_max: float, step: float, tol: float, start_index: int) -> list[ZeroOrdinate]:
    n = max(1, math.ceil((t_max - t_min) / step))
    grid = np.linspace(t_min, t_max, n + 1)
    zg = z_many(grid)
    sg = np.sign(zg)
    idx = np.nonzero(sg[:-1] * sg[1:] < 0)[0]
    lo, hi = _refine(grid[idx], grid[idx + 1], sg[idx], tol)
    found = [(0.5 * (a + b), 0.5 * (b - a)) for a, b in zip(lo, hi)]
    # zeros sitting exactly on grid nodes (interior nodes only)
    for j in np.nonzero(sg[1:-1] == 0)[0] + 1:
        found.append((float(grid[j]), 0.0))
    found.sort()
    out = []
    for k, (t, half) in enumerate(found):
        tq = _q(t)
        err = _q_up(half + abs(tq - t) + 2.0 * np.spacing(t))
        out.append(ZeroOrdinate(start_index + k, tq, err))
    return out


def find_zeros(t_min: float, t_max: float, step: float = 0.05, tol: float = 1e-9,
               verify: bool = True) -> ZeroTable:
    """Scan Z on [t_min, t_max] for sign changes and bisect each to half-width tol.

    Raises MissedZerosError when ``verify`` is set and the count at t_max
    disagrees with N(t_max); the partial table is attached to the exception.
    """
    if not (math.isfinite(t_min) and math.isfinite(t_max)):
        raise DomainError("scan limits must be finite")
    if not step > 0 or not tol > 0:
        raise DomainError("step and tol must be positive")
    if not t_min > 0:
        raise DomainError("t_min must be positive")
    if t_max < t_min:
        raise DomainError("t_max must be >= t_min")
    t_min, t_max = _q(t_min), _q(t_max)
    if t_max == t_min:
        return ZeroTable((), t_max, t_min)
    start = 1
    if t_min > 1.0:
        start = round(_n_of_t(t_min)[0]) + 1
    table = ZeroTable(tuple(_scan(t_min, t_max, step, tol, start)), t_max, t_min)
    if verify:
        _check(table, t_max)
    return table


def _check(table: ZeroTable, T: float):
    rep = verify_count(table, T)
    if not rep.passed:
        raise MissedZerosError(
            f"scan found {rep.table_count} zeros up to {T:g} but N(T) = {rep.expected:.4f}; "
            "retry with a smaller step", table=table, report=rep)


def extend_table(table: ZeroTable, t_max: float, step: float = 0.05, tol: float = 1e-9,
                 verify: bool = True) -> ZeroTable:
    """Scan from table.t_max_scanned up to t_max and append what is found."""
    t_max = _q(t_max)
    if t_max <= table.t_max_scanned:
        return table
    if len(table) == 0 and table.t_max_scanned == 0.0:
        return find_zeros(1.0, t_max, step, tol, verify)
    start = table.zeros[-1].index + 1 if len(table) else table.count_upto(0) + 1
    if not len(table) and table.t_min_scanned > 1.0:
        start = round(_n_of_t(table.t_min_scanned)[0]) + 1
    new = _scan(table.t_max_scanned, t_max, step, tol, start)
    if table.zeros and new and new[0].t <= table.zeros[-1].t:
        # a zero sitting exactly on the old boundary node
        new = [ZeroOrdinate(z.index - 1, z.t, z.err) for z in new[1:]]
    merged = ZeroTable(tuple(table.zeros) + tuple(new), t_max, table.t_min_scanned)
    if verify:
        _check(merged, t_max)
    return merged


# ---------------------------------------------------------------------------
# CSV persistence

def table_to_csv(table: ZeroTable) -> str:
    buf = io.StringIO()
    buf.write(f"# t_min_scanned={table.t_min_scanned:.15g},t_max_scanned={table.t_max_scanned:.15g}\n")
    buf.write(CSV_HEADER + "\n")
    for z in table.zeros:
        buf.write(f"{z.index},{z.t:.15g},{z.err:.15g}\n")
    return buf.getvalue()


def table_from_csv(text: str) -> ZeroTable:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if len(lines) < 2 or not lines[0].startswith("# "):
        raise CacheCorruptionError("missing scan-range comment line")
    try:
        meta = dict(kv.split("=", 1) for kv in lines[0][2:].split(","))
        t_min = float(meta["t_min_scanned"])
        t_max = float(meta["t_max_scanned"])
    except (ValueError, KeyError) as exc:
        raise CacheCorruptionError(f"bad scan-range line: {lines[0]!r}") from exc
    if lines[1] != CSV_HEADER:
        raise CacheCorruptionError(f"expected header {CSV_HEADER!r}, got {lines[1]!r}")
    zeros = []
    for n, line in enumerate(lines[2:], start=3):
        parts = line.split(",")
        try:
            if len(parts) != 3:
                raise ValueError
            z = ZeroOrdinate(int(parts[0]), float(parts[1]), float(parts[2]))
        except ValueError as exc:
            raise CacheCorruptionError(f"line {n}: cannot parse {line!r}") from exc
        if not (math.isfinite(z.t) and math.isfinite(z.err)) or z.err < 0 or z.t <= 0:
            raise CacheCorruptionError(f"line {n}: invalid values")
        if zeros:
            if z.t <= zeros[-1].t:
                raise CacheCorruptionError(f"line {n}: ordinates not increasing")
            if z.index != zeros[-1].index + 1:
                raise CacheCorruptionError(f"line {n}: indices not contiguous")
        if z.t > t_max or z.t < t_min:
            raise CacheCorruptionError(f"line {n}: ordinate outside scanned range")
        zeros.append(z)
    return ZeroTable(tuple(zeros), t_max, t_min)


def write_table(table: ZeroTable, path) -> None:
    """Atomic write: temp file in the target directory, then rename."""
    path = os.fspath(path)
    d = os.path.dirname(os.path.abspath(path))
    os.makedirs(d, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".zeros-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="\n") as fh:
            fh.write(table_to_csv(table))
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def read_table(path) -> ZeroTable:
    with open(path, "r", newline="") as fh:
        return table_from_csv(fh.read())
