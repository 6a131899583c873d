"""Euler characteristics of M-bar_{1,n} and their growth.

``chi_n`` grows like ``(n-1)! / (4 (e-2)^n)``; the relative correction is
``C / sqrt(n)``.  We print the scaled error for a few ``n`` next to ``C``.
"""
import mpmath

from semiclassical import asymptotic_check, chi_series, chi_virtual_series

chi = chi_series(12).egf()
chiv = chi_virtual_series(12).egf()
for n in range(1, 13):
    print(f"n={n:2d}  chi={int(chi[n]):>14d}  chi_v={chiv[n]}")

rep = asymptotic_check(200)
print(f"\nC = {mpmath.nstr(rep.C, 12)}")
for n, val, gap, bound in rep.samples:
    print(f"n={n}: (r_n - 1) sqrt(n) = {mpmath.nstr(val, 10)}   |gap| = {mpmath.nstr(gap, 3)} <= {mpmath.nstr(bound, 3)}")
