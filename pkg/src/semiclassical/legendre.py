"""Legendre transforms of power series and of symmetric functions.

For a series ``f = x^2/2 + O(x^3)`` the Legendre transform ``g`` satisfies
``g(f'(x)) + f(x) = x f'(x)``, equivalently ``g'`` is the compositional
inverse of ``f'``.  The symmetric-function version replaces composition by
plethysm and ``x`` by ``p_1``; it is computed in two steps:

1. solve ``f' o g' = h_1`` for ``g'`` one degree at a time;
2. recover ``g = p_1 g' - f o g'`` (never by integrating ``g'``, since
   ``d/dp_1`` has a large kernel).
"""
from gmpy2 import mpq

from .errors import NotInLambdaStar, WrongLeadingTerm
from .series import ExpSeries, invert_series
from .symf import SymFunc, d_p1, plethysm

__all__ = ["invert_series", "legendre_scalar", "legendre_sym", "in_lambda_star"]


def legendre_scalar(f):
    """Legendre transform of ``f = x^2/2 + O(x^3)``: ``x u - f(u)`` with ``u = (f')^{-1}``."""
    if f.N < 2 or f.c[0] != 0 or f.c[1] != 0 or f.c[2] != mpq(1, 2):
        raise WrongLeadingTerm("legendre_scalar needs f = x^2/2 + O(x^3)")
    u = invert_series(f.derivative())
    return ExpSeries.x(f.N) * u - f.compose(u)


def in_lambda_star(f):
    """True when ``rk(f) = x^2/2 + O(x^3)``."""
    if f.N < 2:
        return False
    return f[()] == 0 and f[(1,)] == 0 and f[(1, 1)] == mpq(1, 2)


def legendre_sym(f):
    """Symmetric Legendre transform of ``f`` in Lambda_*."""
    if not in_lambda_star(f):
        raise NotInLambdaStar("legendre_sym needs rk(f) = x^2/2 + O(x^3)")
    N = f.N
    fp = d_p1(f)  # truncated at N - 1
    p1 = SymFunc.p(1, N)
    tail = fp - p1  # degree >= 2
    # g' = h_1 + sum_n g'_n; g'_n is minus the degree-n part of tail o g'_{<n}
    gp = SymFunc.p(1, 1)
    for n in range(2, N):
        comp = plethysm(tail.truncate(n), gp)
        gn = -comp.degree_part(n)
        gp = SymFunc._raw({**gp._t, **gn._t}, n)
    return p1 * gp - plethysm(f, gp)

