"""Zeta regularization of the parallel-plate vacuum energy."""
import math

from zetakit.regularization import (CasimirConfig, casimir_energy, casimir_force_per_area,
                                    casimir_force_per_area_fd, operator_zeta,
                                    operator_zeta_prime_at_zero, restore_units,
                                    spectral_determinant)
from zetakit.zeta_engine import zeta

# %% the determinant convention on a finite spectrum: det diag(2, 3) = 6
print("det{2,3} =", spectral_determinant([2, 3]))

# %% the operator zeta vanishes at s = 0, its slope there carries zeta(-3) = 1/120
cfg = CasimirConfig(1.0)
print("zeta_A(0) =", operator_zeta(0, cfg), "  zeta(-3) =", zeta(-3).real)
print("zeta_A'(0) =", operator_zeta_prime_at_zero(cfg), "  pi^2/360 =", math.pi ** 2 / 360)

# %% energy and force in natural units
print("energy =", casimir_energy(cfg), "  -pi^2/720 =", -math.pi ** 2 / 720)
print("force  =", casimir_force_per_area(1.0), "  -pi^2/240 =", -math.pi ** 2 / 240)
print("finite difference:", casimir_force_per_area_fd(1.0))

# %% SI units for plates one micrometre apart
print("F/A at 1 um:", restore_units(casimir_force_per_area(1e-6)), "Pa")
