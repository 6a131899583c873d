"""Euler characteristics of M-bar_{1,n} as exponential generating functions.

All series are exact over the rationals.  Floating point enters only in
:func:`asymptotic_check`, which works in mpmath at a precision large
enough for ``(n-1)!`` at ``n`` in the hundreds.
"""
from dataclasses import dataclass, field
from functools import lru_cache
from math import factorial

import mpmath
from gmpy2 import mpq

from .genus1 import b_scalar
from .series import ExpSeries

__all__ = [
    "RationalSeries",
    "solve_g",
    "epsilon",
    "chi_series",
    "chi_virtual_series",
    "chi_semiclassical",
    "gamma0_series",
    "zagier_constants",
    "asymptotic_check",
    "AsymptoticReport",
]

# Exact rational coefficient series; the ring is the only difference from ExpSeries.
RationalSeries = ExpSeries

EPSILON = (mpq(19, 12), mpq(23, 24), mpq(10, 36), mpq(1, 24))


def _F(g, x):
    one_plus = ExpSeries.constant(1, g.N) + g
    return g * 2 - one_plus * g.log1p() - x


@lru_cache(maxsize=None)
def _solve_g(N):
    if N < 1:
        raise ValueError("solve_g needs N >= 1")
    g = ExpSeries.x(1)
    prec = 1
    while prec < N:
        prec = min(2 * prec, N)
        g = ExpSeries(g.c, prec)
        x = ExpSeries.x(prec)
        dF = ExpSeries.constant(1, prec) - g.log1p()
        g = g - _F(g, x) * dF.reciprocal()
    return ExpSeries(g.c, N)


def solve_g(N):
    """The series ``g = x + O(x^2)`` with ``2g - (1+g) log(1+g) = x``, mod ``x^(N+1)``.

    Newton iteration ``g <- g - F(g)/F'(g)`` with ``F'(g) = 1 - log(1+g)``,
    doubling the precision each round.
    """
    return ExpSeries(_solve_g(N).c, N)


def epsilon(u):
    """``(19u + 23u^2/2 + 10u^3/3 + u^4/2) / 12`` evaluated on a series ``u``."""
    out = ExpSeries.constant(0, u.N)
    power = ExpSeries.constant(1, u.N)
    for c in EPSILON:
        power = power * u
        out = out + power * c
    return out


def chi_virtual_series(N):
    """``-1/12 log(1+g) - 1/2 log(1 - log(1+g))``: virtual Euler characteristics."""
    ell = solve_g(N).log1p()
    return ell * mpq(-1, 12) - (-ell).log1p() * mpq(1, 2)


def chi_series(N):
    """``sum chi(M-bar_{1,n}) x^n / n!``."""
    return chi_virtual_series(N) + epsilon(solve_g(N))


def chi_semiclassical(N):
    """The same Euler characteristics via the scalar one-loop sum.

    Vertex data: ``chi(M_{0,n}) = (-1)^(n-3) (n-3)!``, ``chi(M_{1,n})`` equal
    to ``1, 1, 0, 0`` and then ``(-1)^n (n-1)!/12``, and the ``p_2``
    derivative of ``A0`` at rank level, ``x(x+2)/4``.
    """
    M = N + 2
    a0 = ExpSeries.from_egf([0, 0, 0] + [(-1) ** (n - 3) * factorial(n - 3) for n in range(3, M + 1)], M)
    chi1 = [0, 1, 1, 0, 0] + [mpq((-1) ** n * factorial(n - 1), 12) for n in range(5, N + 1)]
    a1 = ExpSeries.from_egf(chi1[: N + 1], N)
    adot = ExpSeries([0, mpq(1, 2), mpq(1, 4)], N)
    _, B1 = b_scalar(a0, a1, adot)
    return B1


def gamma0_series(N):
    """``sum |Gamma^0_{1,n}| x^n / n!``.

    ``(-1/2 log(2 - e^x) + 1/4 (e^(2x) - 1))`` composed with the
    compositional inverse of ``1 + 2x - e^x``.
    """
    expm1 = ExpSeries.exp_x(N) - 1
    outer = (-expm1).log1p() * mpq(-1, 2) + (ExpSeries.exp_x(N, 2) - 1) * mpq(1, 4)
    inner = (ExpSeries.x(N) * 2 - expm1).inverse()
    return outer.compose(inner)


def zagier_constants(dps=30):
    """``(C, C~)``: the ``n^(-1/2)`` corrections for ``chi`` and ``chi_v``."""
    with mpmath.workdps(dps):
        e = mpmath.e
        base = mpmath.sqrt((e - 2) / (18 * mpmath.pi * e))
        C = base * (1 + 4 * e + 9 * e**2 + 4 * e**3 + 2 * e**4)
        return +C, +base


@dataclass
class AsymptoticReport:
    C: object
    C_tilde: object
    K: object
    samples: list = field(default_factory=list)  # (n, (r_n - 1) sqrt n, |gap|, bound)
    ratio_samples: list = field(default_factory=list)  # (n, (chi/chi_v - 1) sqrt n)

    @property
    def within_band(self):
        return all(gap <= bound for _, _, gap, bound in self.samples)

    @property
    def monotone(self):
        gaps = [gap for _, _, gap, _ in self.samples]
        return all(a > b for a, b in zip(gaps, gaps[1:]))

    @property
    def ok(self):
        return self.within_band and self.monotone


def asymptotic_check(n_max=200, start=100, step=20, slack=mpq(11, 10), dps=50):
    """Compare ``(r_n - 1) sqrt n`` with ``C``, where ``r_n = chi_n 4 (e-2)^n / (n-1)!``.

    ``K`` is fitted at ``n = start`` (times ``slack``); the check is
    ``|(r_n - 1) sqrt n - C| <= K/n`` with the gap shrinking along the samples.
    """
    chi = chi_series(n_max).egf()
    chiv = chi_virtual_series(n_max).egf()
    with mpmath.workdps(dps):
        C, Ct = zagier_constants(dps)
        e2 = mpmath.e - 2

        def scaled(n):
            r = mpmath.mpf(int(chi[n])) * 4 * e2**n / mpmath.factorial(n - 1)
            return (r - 1) * mpmath.sqrt(n)

        K = abs(scaled(start) - C) * start * mpmath.mpf(slack.numerator) / slack.denominator
        report = AsymptoticReport(C, Ct, K)
        for n in range(start, n_max + 1, step):
            val = scaled(n)
            report.samples.append((n, val, abs(val - C), K / n))
            q = mpmath.mpf(int(chi[n].numerator)) / int(chi[n].denominator)
            qv = mpmath.mpf(int(chiv[n].numerator)) / int(chiv[n].denominator)
            report.ratio_samples.append((n, (q / qv - 1) * mpmath.sqrt(n)))
    return report
