"""Zeta across the plane: special values, the functional equation, xi and Xi."""
import math

import numpy as np

from zetakit.special_fn import gamma, sin_pi
from zetakit.zeta_engine import eta, xi, xi_big, xi_big_fourier, xi_big_integral, zeta, zeta_with_error

# %% special values; the right half-plane, the strip and the left half-plane all go through one call
for s in (2, 3, 0.5, 0, -1, -3, -2):
    v, err = zeta_with_error(s)
    print(f"zeta({s:>4}) = {v.real: .12f}   err ~ {err:.1e}")
print("pi^2/6 =", math.pi ** 2 / 6, "  1/120 =", 1 / 120)

# %% eta vanishes at s_k = 1 + 2 pi i k / log 2, yet zeta stays finite there
s1 = complex(1, 2 * math.pi / math.log(2))
print("eta(s_1) =", abs(eta(s1)), "  zeta(s_1) =", zeta(s1))

# %% functional equation residual on a coarse grid
worst = 0.0
for x in np.linspace(-4, 5, 10):
    for y in np.linspace(-30, 30, 8):  # avoids s = 0, where the right side needs zeta(1)
        s = complex(x, y)
        rhs = 2 ** s * math.pi ** (s - 1) * sin_pi(s / 2) * gamma(1 - s) * zeta(1 - s)
        worst = max(worst, abs(zeta(s) - rhs) / (1 + abs(zeta(s))))
print("max functional-equation residual:", f"{worst:.1e}")

# %% xi is symmetric and Xi(t) = xi(1/2 + it) is real; three independent routes to Xi
print("xi(0), xi(1), xi(1/2):", xi(0), xi(1), xi(0.5))
for t in (0, 10, 14.134725):
    print(f"Xi({t}): direct {xi_big(t): .3e}  integral {xi_big_integral(t): .3e}  kernel {xi_big_fourier(t): .3e}")
