"""Truncated power series in one variable ``x`` over a duck-typed ring.

Coefficients may be ints, ``mpq``, :class:`~semiclassical.coeff.Coeff`, or
:class:`~semiclassical.mpoly.MPolynomial`; anything closed under ``+``,
``-``, ``*`` and multiplication by rationals works.  ``ExpSeries`` stores the
ordinary coefficients ``c_n`` of ``x^n``; :meth:`ExpSeries.egf` returns
``n! c_n``.

Every series carries its truncation order ``N``: coefficients of ``x^k`` for
``k <= N`` are exact and nothing is known beyond.  Operations propagate
``N`` so that a result never claims more precision than its inputs support.
"""
from math import factorial

from gmpy2 import mpq

from .errors import NonUnitLinearTerm, NonzeroConstantTerm

__all__ = ["ExpSeries"]


def _is_zero(c):
    return c == 0


def _mul(a, b, T):
    """Product of coefficient lists truncated at degree T."""
    out = [0] * (T + 1)
    nz_b = [(j, cb) for j, cb in enumerate(b[: T + 1]) if not _is_zero(cb)]
    for i, ca in enumerate(a[: T + 1]):
        if _is_zero(ca):
            continue
        for j, cb in nz_b:
            if i + j > T:
                break
            out[i + j] = out[i + j] + ca * cb
    return out


def _unit_inverse(c):
    if c == 1:
        return 1
    if hasattr(c, "constant"):
        c = c.constant()
    q = mpq(c)
    if not q:
        raise ZeroDivisionError("constant term is not invertible")
    return 1 / q


def _recip(a, T):
    """1/a to degree T for a with invertible constant term."""
    inv0 = _unit_inverse(a[0])
    out = [0] * (T + 1)
    out[0] = inv0
    for n in range(1, T + 1):
        s = 0
        for k in range(1, min(n, len(a) - 1) + 1):
            if not _is_zero(a[k]) and not _is_zero(out[n - k]):
                s = s + a[k] * out[n - k]
        out[n] = -s * inv0 if inv0 != 1 else -s
    return out


def _compose(f, g, T):
    """f(g) to degree T; g[0] must vanish."""
    K = min(len(f) - 1, T)
    while K > 0 and _is_zero(f[K]):
        K -= 1
    res = [0] * (T + 1)
    res[0] = f[K]
    for k in range(K - 1, -1, -1):
        res = _mul(res, g, T)
        res[0] = res[0] + f[k]
    return res


def _valuation(coeffs, N):
    for i, c in enumerate(coeffs):
        if not _is_zero(c):
            return i
    return N + 1


class ExpSeries:
    """Truncated series ``sum_{n <= N} c_n x^n``."""

    __slots__ = ("c", "N")

    def __init__(self, coeffs, N=None):
        coeffs = list(coeffs)
        if N is None:
            N = len(coeffs) - 1
        if N < 0:
            raise ValueError("truncation order must be nonnegative")
        coeffs = coeffs[: N + 1]
        coeffs += [0] * (N + 1 - len(coeffs))
        self.c = coeffs
        self.N = N

    # -- constructors -------------------------------------------------------

    @classmethod
    def x(cls, N):
        return cls([0, 1], N)

    @classmethod
    def constant(cls, value, N):
        return cls([value], N)

    @classmethod
    def from_egf(cls, values, N=None):
        """Series with ``n! c_n = values[n]``."""
        values = list(values)
        return cls([v * mpq(1, factorial(n)) for n, v in enumerate(values)], N)

    @classmethod
    def exp_x(cls, N, scale=1):
        """``exp(scale * x)``."""
        s = mpq(scale)
        return cls([s**n / factorial(n) for n in range(N + 1)], N)

    @classmethod
    def log1p_x(cls, N):
        """``log(1 + x)``."""
        return cls([0] + [mpq((-1) ** (n + 1), n) for n in range(1, N + 1)], N)

    # -- access -------------------------------------------------------------

    def __getitem__(self, n):
        if n > self.N:
            raise IndexError(f"x^{n} is beyond the truncation order {self.N}")
        return self.c[n]

    def __len__(self):
        return self.N + 1

    def egf(self):
        """The list ``[n! c_n for n <= N]``."""
        return [c * factorial(n) for n, c in enumerate(self.c)]

    def valuation(self):
        return _valuation(self.c, self.N)

    def truncate(self, N):
        return ExpSeries(self.c, min(N, self.N))

    def map(self, fn):
        return ExpSeries([fn(c) for c in self.c], self.N)

    def __eq__(self, other):
        if not isinstance(other, ExpSeries):
            return NotImplemented
        N = min(self.N, other.N)
        return all(a == b for a, b in zip(self.c[: N + 1], other.c[: N + 1]))

    __hash__ = None

    def __repr__(self):
        terms = []
        for n, c in enumerate(self.c):
            if _is_zero(c):
                continue
            terms.append(f"({c})*x^{n}" if n else f"({c})")
        return f"ExpSeries({' + '.join(terms) or '0'} + O(x^{self.N + 1}))"

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, ExpSeries):
            other = ExpSeries.constant(other, self.N)
        N = min(self.N, other.N)
        return ExpSeries([a + b for a, b in zip(self.c[: N + 1], other.c[: N + 1])], N)

    __radd__ = __add__

    def __neg__(self):
        return ExpSeries([-a for a in self.c], self.N)

    def __sub__(self, other):
        if not isinstance(other, ExpSeries):
            other = ExpSeries.constant(other, self.N)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, ExpSeries):
            return ExpSeries([a * other for a in self.c], self.N)
        va, vb = self.valuation(), other.valuation()
        T = min(self.N + vb, other.N + va, max(self.N, other.N))
        return ExpSeries(_mul(self.c, other.c, T), T)

    def __rmul__(self, other):
        return ExpSeries([other * a for a in self.c], self.N)

    def __pow__(self, k):
        out = ExpSeries.constant(1, self.N)
        for _ in range(k):
            out = out * self
        return out

    def derivative(self):
        if self.N == 0:
            raise ValueError("derivative of an order-0 series carries no information")
        return ExpSeries([k * self.c[k] for k in range(1, self.N + 1)], self.N - 1)

    def integral(self):
        """Antiderivative with zero constant term."""
        return ExpSeries([0] + [a * mpq(1, k + 1) for k, a in enumerate(self.c)], self.N + 1)

    def reciprocal(self):
        return ExpSeries(_recip(self.c, self.N), self.N)

    def compose(self, g):
        """``self(g(x))``; ``g`` must have zero constant term."""
        if not _is_zero(g.c[0]):
            raise NonzeroConstantTerm("inner series of a composition must vanish at 0")
        vg = g.valuation()
        T = self.N
        for k in range(1, self.N + 1):
            if not _is_zero(self.c[k]):
                T = min(T, g.N + (k - 1) * vg)
        return ExpSeries(_compose(self.c, g.c, T), T)

    __call__ = compose

    def log1p(self):
        """``log(1 + self)`` for a series vanishing at 0."""
        if not _is_zero(self.c[0]):
            raise NonzeroConstantTerm("log1p needs zero constant term")
        if self.N == 0:
            return ExpSeries([0], 0)
        one_plus = [1] + self.c[1:]
        d = self.derivative()
        q = _mul(d.c, _recip(one_plus, d.N), d.N)
        return ExpSeries(q, d.N).integral()

    def exp(self):
        """``exp(self)`` for a series vanishing at 0."""
        if not _is_zero(self.c[0]):
            raise NonzeroConstantTerm("exp needs zero constant term")
        out = [0] * (self.N + 1)
        out[0] = 1
        for n in range(1, self.N + 1):
            s = 0
            for k in range(1, n + 1):
                if not _is_zero(self.c[k]) and not _is_zero(out[n - k]):
                    s = s + (k * self.c[k]) * out[n - k]
            out[n] = s * mpq(1, n)
        return ExpSeries(out, self.N)

    def inverse(self):
        """Compositional inverse of ``x + O(x^2)`` by Newton iteration."""
        return invert_series(self)


def invert_series(f):
    """Compositional inverse ``g`` with ``f(g(x)) = x`` to order ``f.N``.

    Newton iteration ``g <- g - (f(g) - x) / f'(g)``, doubling the number of
    correct coefficients each round.
    """
    if not _is_zero(f.c[0]) or f.N < 1 or f.c[1] != 1:
        raise NonUnitLinearTerm("invert_series needs f = x + O(x^2)")
    N = f.N
    fp = [k * f.c[k] for k in range(1, N + 1)]
    g = [0, 1]
    prec = 1
    while prec < N:
        prec = min(2 * prec, N)
        g = g + [0] * (prec + 1 - len(g))
        fg = _compose(f.c, g, prec)
        fg[1] = fg[1] - 1
        dfg = _compose(fp, g, prec)
        corr = _mul(fg, _recip(dfg, prec), prec)
        g = [a - b for a, b in zip(g, corr)]
    return ExpSeries(g[: N + 1], N)
