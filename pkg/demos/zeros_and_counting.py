"""Zeros on the critical line: Z(t), a sign-change scan and the count N(T)."""
import math

from zetakit.critical_line import (count_zeros_formula, count_zeros_main_term, find_zeros,
                                   theta_exact, theta_rs, verify_count, z_function)

# %% Z(t) is real, and its sign changes mark zeros
for t in (10, 14.134725, 18, 21.02204, 23):
    print(f"Z({t}) = {z_function(t): .6e}")

# %% the asymptotic theta against the exact one
for t in (14.134725, 100, 1000):
    print(f"theta({t}): exact {theta_exact(t):.9f}   asymptotic {theta_rs(t):.9f}")

# %% scan to T = 100; the count is checked against the argument principle
tab = find_zeros(1, 100)
print(len(tab), "zeros below 100; first three:", [round(z.t, 6) for z in tab[:3]])
for T in (30, 50, 100):
    print(verify_count(tab, T).line())

# %% smoothed counts; the leading term alone converges slowly
for T in (100, 1e3, 1e4):
    lead = T / (2 * math.pi) * math.log(T)
    print(f"T={T:g}: N~{count_zeros_formula(T):.2f}  main term {count_zeros_main_term(T):.2f}  "
          f"N/((T/2pi) log T) = {count_zeros_formula(T) / lead:.3f}")
