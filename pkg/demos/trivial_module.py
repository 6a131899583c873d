"""Count genus-one graphs with genus-zero vertices, as S_n-modules.

Weighting every genus-zero vertex by the trivial representation turns the
one-loop sum into the permutation character on labelled graphs.  We compare
it with the brute-force enumeration in ``graphoracle``.
"""
from semiclassical import b1, trivial_module
from semiclassical.graphoracle import perm_character
from semiclassical.symf import rk, to_schur

B = b1(trivial_module(7))
dims = rk(B).egf()

for n in range(1, 6):
    schur = to_schur(B.degree_part(n))[n]
    pretty = " + ".join(f"{c}*s{''.join(map(str, lam))}" for lam, c in sorted(schur.items(), reverse=True))
    same = perm_character(n) == B.degree_part(n)
    print(f"n={n}: {pretty}   dim {dims[n]}   oracle {'agrees' if same else 'DIFFERS'}")
