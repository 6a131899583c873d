"""Polynomials in the vertex weights ``v_{g,n}``.

These are the values of the scalar sums over stable graphs: a monomial is a
multiset of vertex types ``(g, n)`` and coefficients are exact rationals.
The class is a ring, so it can be used as the coefficient ring of an
:class:`~semiclassical.series.ExpSeries` to run the scalar Legendre
transform and the semi-classical formula symbolically.
"""
from fractions import Fraction

from gmpy2 import mpq

from .coeff import rational

__all__ = ["MPolynomial", "v"]


def _is_scalar(x):
    try:
        rational(x)
    except TypeError:
        return False
    return True


def _table_key(mono):
    return (-sum(g for g, _ in mono), len(mono), tuple((-g, -n) for g, n in sorted(mono, reverse=True)))


class MPolynomial:
    """Sparse polynomial ``{monomial: rational}``, monomial = sorted tuple of (g, n)."""

    __slots__ = ("_t",)

    def __init__(self, terms=None):
        t = {}
        for mono, q in (terms or {}).items():
            mono = tuple(sorted(tuple(x) for x in mono))
            q = rational(q)
            if q:
                t[mono] = t.get(mono, 0) + q
        self._t = {m: q for m, q in t.items() if q}

    @classmethod
    def var(cls, g, n):
        return cls({((g, n),): 1})

    @classmethod
    def const(cls, q):
        return cls({(): q})

    def terms(self):
        """Terms in table order: higher vertex genus first, then fewer factors, then larger valences."""
        return dict(sorted(self._t.items(), key=lambda kv: _table_key(kv[0])))

    def _coerce(self, other):
        if isinstance(other, MPolynomial):
            return other
        if _is_scalar(other):
            return MPolynomial.const(other)
        return None

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._t == other._t

    def __hash__(self):
        return hash(frozenset(self._t.items()))

    def __bool__(self):
        return bool(self._t)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        t = dict(self._t)
        for m, q in other._t.items():
            t[m] = t.get(m, 0) + q
        out = MPolynomial()
        out._t = {m: q for m, q in t.items() if q}
        return out

    __radd__ = __add__

    def __neg__(self):
        out = MPolynomial()
        out._t = {m: -q for m, q in self._t.items()}
        return out

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        t = {}
        for m1, q1 in self._t.items():
            for m2, q2 in other._t.items():
                m = tuple(sorted(m1 + m2))
                t[m] = t.get(m, 0) + q1 * q2
        out = MPolynomial()
        out._t = {m: q for m, q in t.items() if q}
        return out

    __rmul__ = __mul__

    def evaluate(self, values):
        """Substitute ``values[(g, n)]`` (a dict, or a callable of g, n)."""
        get = values if callable(values) else (lambda g, n: values[(g, n)])
        total = mpq(0)
        for mono, q in self._t.items():
            term = q
            for g, n in mono:
                term *= rational(get(g, n))
            total += term
        return total

    def restrict_genus_weight(self, genus):
        """Terms whose vertex genera sum to ``genus``."""
        out = MPolynomial()
        out._t = {m: q for m, q in self._t.items() if sum(g for g, _ in m) == genus}
        return out

    def __repr__(self):
        return f"MPolynomial({str(self)!r})"

    def __str__(self):
        if not self._t:
            return "0"
        parts = []
        for mono, q in self.terms().items():
            counts = {}
            for x in mono:
                counts[x] = counts.get(x, 0) + 1
            factors = [
                f"v{g},{n}" + (f"^{k}" if k > 1 else "")
                for (g, n), k in sorted(counts.items(), key=lambda kv: (-kv[0][0], -kv[0][1]))
            ]
            body = "*".join(factors)
            aq = abs(q)
            if not body:
                s = str(Fraction(int(aq.numerator), int(aq.denominator)))
            elif aq == 1:
                s = body
            else:
                s = f"{aq}*{body}"
            parts.append(("-" if q < 0 else "+", s))
        out = " ".join(f"{sg} {s}" for sg, s in parts)
        return out[2:] if out.startswith("+ ") else "-" + out[1:]


def v(g, n):
    """The variable ``v_{g,n}``."""
    return MPolynomial.var(g, n)
