"""Prime staircases, and the same staircases rebuilt from zeros of zeta."""
import math

import numpy as np

from zetakit.critical_line import find_zeros
from zetakit.explicit_formula import (pi_explicit, riemann_big_pi_explicit, staircase_report,
                                      von_mangoldt_psi_explicit)
from zetakit.prime_arith import (big_pi_exact, chebyshev_psi, golden_formula_check, mobius,
                                 mobius_invert_pi, prime_pi, sieve)

sv = sieve(10 ** 6)

# %% exact staircases; Pi(100) = 28 + 8/15 in rational arithmetic
print("pi(100) =", prime_pi(100, sv), "  Pi(100) =", big_pi_exact(100, sv), "  psi(100) =", chebyshev_psi(100, sv))
print("mu(1..20) =", [mobius(n) for n in range(1, 21)])
print("M(Pi)(100) =", mobius_invert_pi(100, sv))

# %% log zeta(s) / s against the prime-power sum
for s in (2, 3, 2 + 3j):
    print(f"s={s}: residual {golden_formula_check(s, sv, 1e6):.1e}")

# %% explicit formulas with the first few hundred zeros
zeros = find_zeros(1, 560)
for k in (10, 50, 200, 300):
    r = riemann_big_pi_explicit(100, zeros, k)
    print(f"Pi(100) from {k:3d} pairs: {r.value:.4f}")
print("pi(100) from 200 pairs:", round(pi_explicit(100, zeros, 200), 3))
print("psi(100) from 300 pairs:", round(von_mangoldt_psi_explicit(100, zeros, 300).value, 3))

# %% the error is small between jumps and Gibbs-like next to them
rows = staircase_report(np.arange(10.5, 60, 4.0), zeros, sv, n_pairs=300)
for r in rows:
    print(f"x={r.x:5.1f}  psi={r.exact:8.4f}  explicit={r.approx:8.4f}  diff={r.approx - r.exact:+.3f}")
print("x=8 (a jump) sits at the midpoint:", chebyshev_psi(8, sv), chebyshev_psi(7.99, sv) + 0.5 * math.log(2))
