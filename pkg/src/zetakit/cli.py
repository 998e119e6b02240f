"""Command-line front end: ``zetakit {zeta,zeros,primes,explicit,casimir}``.

Exit codes: 0 success, 2 domain or usage error, 3 corrupt zero cache.
Numbers print with 10 significant digits in plain mode and 15 in csv/json.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys

from . import critical_line as cl
from . import explicit_formula as ef
from . import prime_arith as pa
from . import regularization as rg
from .errors import CacheCorruptionError, DomainError, ZetaKitError
from .zeta_engine import EvalOptions, zeta_with_error

CACHE_ENV = "ZETAKIT_CACHE"
DEFAULT_ZETA_TOL = 1e-10
DEFAULT_ZERO_TOL = 1e-9
DEFAULT_STEP = 0.05
SCAN_START = 1.0

EXIT_OK, EXIT_DOMAIN, EXIT_CORRUPT = 0, 2, 3


def default_cache_path() -> str:
    env = os.environ.get(CACHE_ENV)
    if env:
        return env
    base = os.environ.get("XDG_CACHE_HOME") or os.path.join(os.path.expanduser("~"), ".cache")
    return os.path.join(base, "zetakit", "zeros.csv")


class Renderer:
    """Formats one record (an ordered dict) or a list of records."""

    def __init__(self, fmt: str, out):
        self.fmt = fmt
        self.out = out
        self.digits = 10 if fmt == "plain" else 15

    def num(self, v):
        if isinstance(v, bool) or isinstance(v, str):
            return v
        if isinstance(v, int):
            return v
        return float(f"{v:.{self.digits}g}") + 0.0  # no negative zero

    def text(self, v) -> str:
        if isinstance(v, float):
            return f"{v + 0.0:.{self.digits}g}"
        return str(v)

    def record(self, rec: dict):
        if self.fmt == "json":
            self.out.write(json.dumps({k: self.num(v) for k, v in rec.items()}) + "\n")
        elif self.fmt == "csv":
            self.rows([rec])
        else:
            width = max(len(k) for k in rec)
            for k, v in rec.items():
                self.out.write(f"{k:<{width}}  {self.text(v)}\n")

    def rows(self, recs: list, fields=None):
        fields = fields or (list(recs[0]) if recs else [])
        if self.fmt == "json":
            self.out.write(json.dumps([{k: self.num(r[k]) for k in fields} for r in recs]) + "\n")
        elif self.fmt == "csv":
            w = csv.writer(self.out, lineterminator="\n")
            w.writerow(fields)
            for r in recs:
                w.writerow([self.text(r[k]) for k in fields])
        else:
            for r in recs:
                self.out.write("  ".join(self.text(r[k]) for k in fields) + "\n")


def _err(msg: str):
    sys.stderr.write(f"zetakit: error: {msg}\n")


# ---------------------------------------------------------------------------
# commands

def cmd_zeta_eval(args, r: Renderer) -> int:
    val, err = zeta_with_error(complex(args.re, args.im), EvalOptions(tol=args.tol))
    r.record({"s_re": args.re, "s_im": args.im, "re": val.real, "im": val.imag, "err": err})
    return EXIT_OK


def _load_cache(path: str) -> cl.ZeroTable | None:
    if not os.path.exists(path):
        return None
    return cl.read_table(path)


def _zero_rec(z: cl.ZeroOrdinate) -> dict:
    return {"index": z.index, "t": z.t, "err": z.err}


def cmd_zeros_scan(args, r: Renderer) -> int:
    if not args.t_max > 0:
        raise DomainError("t-max must be positive")
    path = args.cache or default_cache_path()
    old = _load_cache(path)
    if old is None:
        start = min(SCAN_START, args.t_max)
        table = cl.find_zeros(start, args.t_max, args.step, args.tol, verify=False)
        n_old = 0
    else:
        table = cl.extend_table(old, args.t_max, args.step, args.tol, verify=False)
        n_old = len(old)
    new = [_zero_rec(z) for z in table.zeros[n_old:]]
    T = min(args.t_max, table.t_max_scanned)
    rep = cl.verify_count(table, T)
    if rep.passed:
        if table is not old:
            cl.write_table(table, path)
    if r.fmt == "json":
        r.out.write(json.dumps({
            "zeros": [{k: r.num(v) for k, v in z.items()} for z in new],
            "t_max_scanned": r.num(table.t_max_scanned),
            "verify": {"T": r.num(rep.T), "count": rep.table_count,
                       "expected": r.num(rep.expected), "passed": rep.passed},
        }) + "\n")
    else:
        r.rows(new, ["index", "t", "err"])
        (r.out if r.fmt == "plain" else sys.stderr).write(rep.line() + "\n")
    if not rep.passed:
        sys.stderr.write(f"WARN: zero count mismatch at T={T:g}; cache not updated, "
                         "rerun with a smaller --step\n")
    return EXIT_OK


def _sieve_for(x: float) -> pa.PrimeSieve:
    if not (math.isfinite(x) and x >= 0):
        raise DomainError("x must be a finite non-negative number")
    return pa.sieve(max(2, math.floor(x)))


def _exact(kind: str, x: float, sv: pa.PrimeSieve) -> float:
    if kind == "pi":
        return pa.prime_pi(x, sv)
    if kind == "bigpi":
        return pa.big_pi(x, sv)
    return pa.chebyshev_psi(x, sv)


def cmd_primes(args, r: Renderer) -> int:
    sv = _sieve_for(args.x)
    r.record({"kind": args.kind, "x": args.x, "value": _exact(args.kind, args.x, sv)})
    return EXIT_OK


def height_for_zeros(n: int) -> float:
    """Smallest T (to 0.1) whose smoothed zero count reaches n + 1."""
    lo, hi = 3.0, 10.0
    while cl.count_zeros_formula(hi) < n + 1:
        hi *= 2.0
    while hi - lo > 0.05:
        mid = 0.5 * (lo + hi)
        if cl.count_zeros_formula(mid) < n + 1:
            lo = mid
        else:
            hi = mid
    return math.ceil(hi * 10.0) / 10.0


def cmd_explicit(args, r: Renderer) -> int:
    path = args.cache or default_cache_path()
    table = _load_cache(path) or cl.ZeroTable()
    pairs = len(table) if args.pairs is None else args.pairs
    if pairs > len(table) or (pairs == 0 and args.kind != "psi"):
        need = max(pairs, 1)
        flag = f" --cache {args.cache}" if args.cache else ""
        raise DomainError(
            f"cache {path} holds {len(table)} zeros, {need} needed; "
            f"run 'zetakit zeros scan --t-max {height_for_zeros(need):g}{flag}' first")
    sv = _sieve_for(args.x)
    if args.kind == "psi":
        res = ef.von_mangoldt_psi_explicit(args.x, table, pairs)
    elif args.kind == "bigpi":
        res = ef.riemann_big_pi_explicit(args.x, table, pairs)
    else:
        res = ef.pi_explicit_result(args.x, table, pairs)
    exact = _exact(args.kind, args.x, sv)
    r.record({"kind": args.kind, "x": args.x, "value": res.value, "n_zero_pairs": res.n_zero_pairs,
              "smooth_part": res.smooth_part, "oscillatory_part": res.oscillatory_part,
              "tail_part": res.tail_part, "exact": exact, "delta": res.value - exact})
    return EXIT_OK


def cmd_casimir(args, r: Renderer) -> int:
    cfg = rg.CasimirConfig(args.a, args.area)
    energy = rg.casimir_energy(cfg)
    force = rg.casimir_force_per_area(cfg.a)
    rec = {"energy": energy, "force_per_area": force, "a": cfg.a, "area": cfg.A}
    if r.fmt == "plain":
        rec["energy_si_J"] = rg.restore_units(energy)
        rec["force_per_area_si_Pa"] = rg.restore_units(force)
    r.record(rec)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json", "plain"), default="plain")
    cache = argparse.ArgumentParser(add_help=False)
    cache.add_argument("--cache", default=None,
                       help=f"zero cache CSV (default: ${CACHE_ENV} or ~/.cache/zetakit/zeros.csv)")

    p = argparse.ArgumentParser(prog="zetakit", description=__doc__.split("\n")[0])
    sub = p.add_subparsers(dest="command", required=True)

    z = sub.add_parser("zeta", help="evaluate zeta(s)")
    zsub = z.add_subparsers(dest="action", required=True)
    ze = zsub.add_parser("eval", parents=[common])
    ze.add_argument("--re", type=float, required=True)
    ze.add_argument("--im", type=float, default=0.0)
    ze.add_argument("--tol", type=float, default=DEFAULT_ZETA_TOL)
    ze.set_defaults(func=cmd_zeta_eval)

    zr = sub.add_parser("zeros", help="critical-line zero cache")
    zrsub = zr.add_subparsers(dest="action", required=True)
    zs = zrsub.add_parser("scan", parents=[common, cache])
    zs.add_argument("--t-max", type=float, required=True)
    zs.add_argument("--step", type=float, default=DEFAULT_STEP)
    zs.add_argument("--tol", type=float, default=DEFAULT_ZERO_TOL)
    zs.set_defaults(func=cmd_zeros_scan)

    pr = sub.add_parser("primes", parents=[common], help="exact prime staircases")
    pr.add_argument("kind", choices=("pi", "bigpi", "psi"))
    pr.add_argument("x", type=float)
    pr.set_defaults(func=cmd_primes)

    ex = sub.add_parser("explicit", parents=[common, cache], help="explicit formulas")
    ex.add_argument("kind", choices=("pi", "bigpi", "psi"))
    ex.add_argument("x", type=float)
    ex.add_argument("--pairs", type=int, default=None)
    ex.set_defaults(func=cmd_explicit)

    ca = sub.add_parser("casimir", parents=[common], help="parallel-plate Casimir effect")
    ca.add_argument("--a", type=float, required=True)
    ca.add_argument("--area", type=float, default=1.0)
    ca.set_defaults(func=cmd_casimir)
    return p


def main(argv=None, out=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = out if out is not None else sys.stdout
    buf = io.StringIO()
    try:
        code = args.func(args, Renderer(args.format, buf))
    except CacheCorruptionError as exc:
        _err(f"corrupt zero cache: {exc}")
        return EXIT_CORRUPT
    except (ZetaKitError, ValueError, OverflowError) as exc:
        _err(str(exc))
        return EXIT_DOMAIN
    out.write(buf.getvalue())
    out.flush()
    return code


if __name__ == "__main__":
    sys.exit(main())
