"""Serre polynomials of M-bar_{1,n} from the open strata.

The genus-zero and genus-one characteristics are assembled from their
product formulas, pushed through the one-loop sum, and read off degree by
degree.  Each row is checked for Poincare duality on the way.
"""
import sys

from semiclassical import poincare_check, serre_equivariant, serre_nonequivariant
from semiclassical.moduli import euler_specialization

N = int(sys.argv[1]) if len(sys.argv) > 1 else 11

print("Equivariant, n <= 4:")
for n in range(1, 5):
    print(f"  n={n}: {serre_equivariant(n, N)}")

print(f"\nNon-equivariant, n <= {N}:")
for n in range(1, N + 1):
    c = serre_nonequivariant(n, N)
    dual = poincare_check(serre_equivariant(n, N))
    print(f"  n={n:2d}: {c}   chi={euler_specialization(c)}   duality {'ok' if dual else 'FAILS'}")
