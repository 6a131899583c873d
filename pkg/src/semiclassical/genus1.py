"""Genus 0 and genus 1 sums over stable graphs.

Given the characteristics ``A0`` (genus 0 vertices) and ``A1`` (genus 1
vertices), the tree-level sum is ``b0 = L(e2 - A0) - h2`` and the one-loop
sum is

    b1 = (A1 + necklace(A0)) o (h1 + b0')

where the necklace term is

    -1/2 sum_n phi(n)/n log(1 - psi_n(A0''))
        + (A0dot (A0dot + 1) + 1/4 psi_2(A0'')) / (1 - psi_2(A0''))

with ``'`` the derivative in ``p_1`` and ``dot`` the derivative in ``p_2``.

The ``1/4 psi_2(A0'')`` summand comes from the Gaussian integral over an
even-indexed variable ``q_{2m}`` centred at 1: the shifted centre leaves a
residual ``psi/(2n(1 - psi))`` in the exponent besides the ``A0dot`` part.
Dropping it (``quarter_term=False``) gives non-integral characters, e.g.
``11/4 s_2 + 1/4 s_11`` instead of ``3 s_2`` for the trivial module.  Its
rank vanishes, so the scalar formulas are unaffected.
"""
from dataclasses import dataclass

from math import factorial

from gmpy2 import mpq

from .mpoly import MPolynomial
from .legendre import legendre_scalar, legendre_sym
from .numtheory import totient
from .series import ExpSeries
from .symf import SymFunc, adams_sym, d_p1, d_p2, log1p, plethysm

__all__ = [
    "GenusData",
    "b0",
    "necklace_term",
    "b1",
    "b1_alt_check",
    "necklace_characteristic",
    "cyclic_cycle_index",
    "b_scalar",
    "mv_symbolic",
    "trivial_module",
]


@dataclass(frozen=True)
class GenusData:
    """Vertex characteristics ``A0`` and ``A1``.

    ``A0`` must be cusp-free with no component of degree below 3; ``A1`` has
    no constant term.  Computing ``b1`` to degree ``n`` needs ``A0`` to
    degree ``n + 2``, so :attr:`N` is ``min(A0.N - 2, A1.N)``.
    """

    A0: SymFunc
    A1: SymFunc

    def __post_init__(self):
        if self.A0.min_degree() < 3:
            raise ValueError("A0 has components of degree < 3")
        if self.A1.min_degree() < 1:
            raise ValueError("A1 has a constant term")
        if not self.A0.is_cusp_free():
            raise ValueError("A0 must be cusp-free")

    @property
    def N(self):
        return min(self.A0.N - 2, self.A1.N)


def trivial_module(N):
    """``A0 = h3 + h4 + ... + hN`` and ``A1 = 0``: every genus 0 vertex weighted by 1."""
    A0 = SymFunc.zero(N)
    for n in range(3, N + 1):
        A0 = A0 + SymFunc.h(n, N)
    return GenusData(A0, SymFunc.zero(N - 2))


def b0(data):
    """``L(e2 - A0) - h2``, truncated at ``A0.N``."""
    A0 = data.A0 if isinstance(data, GenusData) else data
    N = A0.N
    if N < 3:
        return SymFunc.zero(N)
    return legendre_sym(SymFunc.e(2, N) - A0) - SymFunc.h(2, N)


def necklace_term(A0, quarter_term=True):
    """The necklace contribution to ``b1 o (h1 - A0')``, truncated at ``A0.N - 2``."""
    A0pp = d_p1(d_p1(A0))
    A0dot = d_p2(A0)
    T = A0pp.N
    # log(1 - psi_n(u)) = psi_n(log(1 - u)) for cusp-free u
    ell = log1p(-A0pp)
    total = SymFunc.zero(T)
    for n in range(1, T + 1):
        total = total + adams_sym(n, ell, T) * mpq(totient(n), n)
    numerator = A0dot * (A0dot + 1)
    if quarter_term:
        numerator = numerator + adams_sym(2, A0pp, T) * mpq(1, 4)
    correction = numerator * adams_sym(2, A0pp.geometric(), T)
    return total * mpq(-1, 2) + correction


def b1(data, quarter_term=True):
    """The genus-one sum ``(A1 + necklace(A0)) o (h1 + b0')``."""
    N = data.N
    inner = data.A1.truncate(N) + necklace_term(data.A0, quarter_term).truncate(N)
    outer = SymFunc.p(1, N) + d_p1(b0(data)).truncate(N)
    return plethysm(inner, outer)


def b1_alt_check(data, b1_value=None):
    """Check ``b1 o (h1 - A0') = A1 + necklace(A0)`` to degree ``data.N``."""
    N = data.N
    lhs = plethysm(b1(data) if b1_value is None else b1_value, SymFunc.p(1, N) - d_p1(data.A0).truncate(N))
    rhs = data.A1.truncate(N) + necklace_term(data.A0).truncate(N)
    return lhs == rhs


def necklace_characteristic(N):
    """``-sum_n phi(n)/n log(1 - p_n)`` to degree ``N``."""
    total = SymFunc.zero(N)
    for n in range(1, N + 1):
        ell = log1p(-SymFunc.p(1, N // n))
        total = total + adams_sym(n, ell, N) * mpq(-totient(n), n)
    return total


def cyclic_cycle_index(n, N=None):
    """Cycle index of the cyclic group Z_n acting on n points, ``(1/n) sum_{d|n} phi(d) p_d^(n/d)``."""
    N = n if N is None else N
    terms = {}
    for d in range(1, n + 1):
        if n % d == 0:
            terms[(d,) * (n // d)] = mpq(totient(d), n)
    return SymFunc(terms, N)


def b_scalar(a0, a1, adot0=None):
    """Scalar tree and one-loop sums ``(b0, b1)``.

    ``b0 = L(x^2/2 - a0) - x^2/2`` and
    ``b1 = (a1 - 1/2 log(1 - a0'') + adot0 (adot0 + 1)) o (x + b0')``.
    ``adot0`` defaults to zero, which gives the plain graph sum weighted by
    ``1/|Aut|``.
    """
    N = a0.N
    half_x2 = ExpSeries([0, 0, mpq(1, 2)], N)
    B0 = legendre_scalar(half_x2 - a0) - half_x2
    a0pp = a0.derivative().derivative()
    inner = a1 - (-a0pp).log1p() * mpq(1, 2)
    if adot0 is not None:
        inner = inner + adot0 * (adot0 + 1)
    B1 = inner.compose(ExpSeries.x(B0.N) + B0.derivative())
    return B0, B1


def mv_symbolic(max_n):
    """Symbolic graph sums ``{(g, n): MPolynomial}`` for ``g = 0, 1`` and ``n <= max_n``.

    Feeds ``a_g = sum_n v_{g,n} x^n / n!`` through :func:`b_scalar` and reads
    off ``n!`` times each coefficient.
    """
    M = max_n + 2
    zero = MPolynomial()
    a0 = ExpSeries([zero] * 3 + [MPolynomial.var(0, n) * mpq(1, factorial(n)) for n in range(3, M + 1)], M)
    a1 = ExpSeries([zero] + [MPolynomial.var(1, n) * mpq(1, factorial(n)) for n in range(1, max_n + 1)], max_n)
    B0, B1 = b_scalar(a0, a1)
    out = {}
    for n in range(3, max_n + 1):
        out[(0, n)] = B0[n] * factorial(n)
    for n in range(1, max_n + 1):
        out[(1, n)] = B1[n] * factorial(n)
    return out
